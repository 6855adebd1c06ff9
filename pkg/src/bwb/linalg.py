"""Incremental row echelon form over a coefficient field (sparse dict vectors)."""
from __future__ import annotations


class EchelonSpace:
    """Span of sparse vectors ``{index: coeff}``; indices must be mutually comparable.

    ``add`` reduces a vector against the stored pivots and keeps it when it is
    independent, which is all the degreewise presentation code needs.
    """

    def __init__(self, field):
        self.field = field
        self.rows: dict = {}  # pivot index -> monic row

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        norm = self.field.norm
        v = {k: c for k, c in vec.items() if c}
        while v:
            hits = [k for k in v if k in self.rows]
            if not hits:
                break
            for k in hits:
                c = v.get(k)
                if not c:
                    continue
                for j, d in self.rows[k].items():
                    x = norm(v.get(j, 0) - c * d)
                    if x:
                        v[j] = x
                    else:
                        v.pop(j, None)
        return v

    def add(self, vec: dict) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v)
        inv = self.field.inv(v[piv])
        norm = self.field.norm
        row = {k: norm(c * inv) for k, c in v.items()}
        # keep stored rows reduced with respect to the new pivot
        for k, r in self.rows.items():
            c = r.get(piv)
            if c:
                for j, d in row.items():
                    x = norm(r.get(j, 0) - c * d)
                    if x:
                        r[j] = x
                    else:
                        r.pop(j, None)
        self.rows[piv] = row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank(vectors, field) -> int:
    space = EchelonSpace(field)
    for v in vectors:
        space.add(v)
    return len(space)
