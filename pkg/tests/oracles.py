"""Test-only oracles that avoid the module-theoretic width pipeline.

``width_by_sections`` computes the width as the dimension of the space of
sections of ``E`` over ``Z_k`` minus the zero section, modulo the global
sections. A class is determined by the negative-``u`` part ``b_-`` of the
second entry (the first entry's negative part is then forced), subject to

* the terms of ``(p b_-)_r`` with ``k r < s < j`` vanishing for ``r < 0``;
* ``(z^-j (p b_-)_{r >= 0}, 0)`` being zero in ``H^1(E)``, tested in a
  truncated Čech window.
"""

from __future__ import annotations

from zkinv.bundle import BundleSpec, normalize_p
from zkinv.modalg.linalg import sparse_rank


def width_by_sections(spec: BundleSpec) -> int:
    spec = normalize_p(spec)
    k, j, p = spec.k, spec.j, spec.p
    bvars = [(r, s) for r in range(-(j // k), 0) for s in range(0, k * r + j + 1)]
    if not bvars:
        return 0
    R = j // k + 2
    Z = 2 * j + k * R + 2
    nb = len(bvars)

    # products p * b_- by variable
    images = []
    for (r, s) in bvars:
        images.append({(s + ps, r + pr): c for (ps, pr), c in p.items()})

    # forced vanishing at negative u-degree
    vanish: dict = {}
    for col, img in enumerate(images):
        for (s, r), c in img.items():
            if r < 0 and k * r < s < j:
                vanish.setdefault((s, r), {})[col] = c

    # window coordinates: first slot only matters after reducing the second
    def index(slot, r, s):
        return nb + ((slot * (R + 1) + r) * Z + (s + Z))

    # the class x(b_-) projected into the window
    xcols: dict = {}
    for col, img in enumerate(images):
        for (s, r), c in img.items():
            s2 = s - j
            if 0 <= r <= R and -Z <= s2 < 0:
                xcols.setdefault(index(0, r, s2), {})[col] = c

    # coboundaries T^-1 (z^t u^r e_i), with T^-1 = [[z^-j, -p], [0, z^j]]
    brows: list[dict] = []  # keyed by window index, one dict per coboundary
    for r in range(R + 1):
        for t in range(-Z - j, k * r + 1):
            v = {}
            if -Z <= t - j < 0:
                v[index(0, r, t - j)] = 1
            if v:
                brows.append(v)
            w = {}
            for (ps, pr), c in p.items():
                if r + pr <= R and -Z <= t + ps < 0:
                    w[index(0, r + pr, t + ps)] = -c
            if -Z <= t + j < 0:
                w[index(1, r, t + j)] = 1
            if w:
                brows.append(w)

    # columns: b_- variables then lambda_i; rows: window coordinates and vanishing
    rows: dict = {}
    for key, entries in xcols.items():
        rows.setdefault(key, {}).update(entries)
    for i, v in enumerate(brows):
        for key, c in v.items():
            rows.setdefault(key, {})[nb + i] = -c
    matrix = list(rows.values()) + list(vanish.values())
    b_only = [{i: c for i, c in row.items() if i >= nb} for row in rows.values()]
    # dim{b : x(b) in span B, vanishing} = nb - rank(M) + rank(B)
    return nb - sparse_rank(matrix) + sparse_rank([r for r in b_only if r])
