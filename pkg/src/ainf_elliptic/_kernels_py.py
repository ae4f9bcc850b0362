"""Pure-Python modular row reduction; same contract as the compiled kernel."""
from __future__ import annotations


def rank_mod_p(indptr, indices, data, ncols: int, p: int) -> int:
    p = int(p)
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for i in range(len(indptr) - 1):
        cur: dict[int, int] = {}
        for k in range(int(indptr[i]), int(indptr[i + 1])):
            v = int(data[k]) % p
            if v:
                cur[int(indices[k])] = v
        while cur:
            lead = min(cur)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(cur[lead], p - 2, p)
                pivots[lead] = {c: (v * inv) % p for c, v in cur.items()}
                rank += 1
                break
            f = cur[lead]
            for c, v in prow.items():
                x = (cur.get(c, 0) - f * v) % p
                if x:
                    cur[c] = x
                else:
                    cur.pop(c, None)
    return rank
