"""Structural and Delaunay checks for a single-level triangulation."""
from __future__ import annotations

import numpy as np

from .predicates import incircle_det, orient2d

INF = 0
NEXT = (1, 2, 0)


def validate_triangulation(tri, full: bool = False) -> list:
    problems = []
    x, y, tv, tn = tri.x, tri.y, tri.tv, tri.tn
    live_v = [v for v in range(1, len(tri.valive)) if tri.valive[v]]
    if len(live_v) != tri.n:
        problems.append(f"site count {tri.n} != live vertices {len(live_v)}")

    if tri.dim < 2:
        if any(tv[3 * t] != -1 for t in range(len(tv) // 3)):
            problems.append("degenerate structure holds triangles")
        pts = [(x[v], y[v]) for v in tri._line]
        if len(pts) >= 3:
            a, b = pts[0], pts[1]
            if any(orient2d(a, b, p) != 0 for p in pts[2:]):
                problems.append("degenerate structure holds non-collinear sites")
        if len(set(pts)) != len(pts):
            problems.append("duplicate sites")
        return problems

    live_t = tri.live_triangles()
    hull = 0
    finite = 0
    edges = set()
    for t in live_t:
        b3 = 3 * t
        vs = tv[b3:b3 + 3]
        if vs.count(INF) > 1:
            problems.append(f"triangle {t} has {vs.count(INF)} infinite vertices")
            continue
        for w in vs:
            if w != INF and not tri.is_live_vertex(w):
                problems.append(f"triangle {t} references dead vertex {w}")
        if INF in vs:
            hull += 1
        else:
            finite += 1
            a, b, c = vs
            if orient2d((x[a], y[a]), (x[b], y[b]), (x[c], y[c])) <= 0:
                problems.append(f"triangle {t} is not counterclockwise")
            for j in range(3):
                p, q = vs[j], vs[NEXT[j]]
                edges.add((p, q) if p < q else (q, p))
        for j in range(3):
            u = tn[b3 + j]
            if not tri.is_live_triangle(u):
                problems.append(f"triangle {t} neighbor {j} -> dead triangle {u}")
                continue
            u3 = 3 * u
            back = [k for k in range(3) if tn[u3 + k] == t]
            if not back:
                problems.append(f"adjacency {t}->{u} not mutual")
                continue
            shared_t = {vs[NEXT[j]], vs[(j + 2) % 3]}
            if not any({tv[u3 + NEXT[k]], tv[u3 + (k + 2) % 3]} == shared_t
                       and tv[u3 + NEXT[k]] == vs[(j + 2) % 3] for k in back):
                problems.append(f"adjacency {t}<->{u} edge mismatch")

    for v in live_v:
        t = tri.vtri[v]
        if not tri.is_live_triangle(t) or v not in tv[3 * t:3 * t + 3]:
            problems.append(f"vertex {v} link to triangle {t} is stale")

    n = tri.n
    if n >= 3:
        if finite != 2 * n - 2 - hull:
            problems.append(f"Euler: {finite} faces, expected {2 * n - 2 - hull}")
        if len(edges) != 3 * n - 3 - hull:
            problems.append(f"Euler: {len(edges)} edges, expected {3 * n - 3 - hull}")
    if finite != tri.n_finite_tris:
        problems.append("finite triangle counter out of sync")
    if problems:
        return problems

    # local empty-circle condition on every interior edge
    for t in live_t:
        b3 = 3 * t
        a, b, c = tv[b3:b3 + 3]
        if INF in (a, b, c):
            continue
        for j in range(3):
            u = tn[b3 + j]
            u3 = 3 * u
            k = [m for m in range(3) if tn[u3 + m] == t][0]
            d = tv[u3 + k]
            if d == INF:
                continue
            if incircle_det((x[a], y[a]), (x[b], y[b]), (x[c], y[c]), (x[d], y[d])) > 0:
                problems.append(f"edge of triangle {t} opposite slot {j} is not Delaunay")
    if full and not problems:
        problems.extend(_global_empty_circle(tri))
    return problems


def _global_empty_circle(tri, chunk: int = 256) -> list:
    """Every site against every finite circumcircle, float filter plus exact fallback."""
    x, y, tv = tri.x, tri.y, tri.tv
    verts = tri.vertices()
    px = np.array([x[v] for v in verts], dtype=np.float64)
    py = np.array([y[v] for v in verts], dtype=np.float64)
    tris = np.array([tv[3 * t:3 * t + 3] for t in tri.finite_triangles()], dtype=np.int64)
    X = np.array(x, dtype=np.float64)
    Y = np.array(y, dtype=np.float64)
    problems = []
    for s in range(0, len(tris), chunk):
        blk = tris[s:s + chunk]
        ax, ay = X[blk[:, 0]][:, None], Y[blk[:, 0]][:, None]
        bx, by = X[blk[:, 1]][:, None], Y[blk[:, 1]][:, None]
        cx, cy = X[blk[:, 2]][:, None], Y[blk[:, 2]][:, None]
        adx, ady = ax - px, ay - py
        bdx, bdy = bx - px, by - py
        cdx, cdy = cx - px, cy - py
        al = adx * adx + ady * ady
        bl = bdx * bdx + bdy * bdy
        cl = cdx * cdx + cdy * cdy
        bc = bdx * cdy - cdx * bdy
        ca = cdx * ady - adx * cdy
        ab = adx * bdy - bdx * ady
        det = al * bc + bl * ca + cl * ab
        perm = (al * (np.abs(bdx * cdy) + np.abs(cdx * bdy))
                + bl * (np.abs(cdx * ady) + np.abs(adx * cdy))
                + cl * (np.abs(adx * bdy) + np.abs(bdx * ady)))
        bound = 1e-12 * perm
        for i, k in zip(*np.nonzero(det > -bound)):
            a, b, c = (int(w) for w in blk[i])
            d = verts[k]
            if d in (a, b, c):
                continue
            if incircle_det((x[a], y[a]), (x[b], y[b]), (x[c], y[c]), (x[d], y[d])) > 0:
                problems.append(f"site {d} inside circumcircle of ({a}, {b}, {c})")
    return problems
