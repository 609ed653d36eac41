"""Single-level dynamic Delaunay triangulation.

Triangle-based representation: every triangle stores three vertex ids in
counterclockwise order and three neighbor ids, neighbor ``j`` being the
triangle across the edge opposite vertex ``j``. The convex hull is closed by
one infinite vertex (id ``INF``); an infinite triangle ``(a, b, INF)`` has the
unbounded region on the left of ``a -> b``.

Storage is flat lists with free lists, so vertex and triangle ids stay valid
until the element is deleted. With fewer than three sites, or only collinear
sites, no triangles exist and the sites are kept in a plain list.
"""
from __future__ import annotations

from enum import Enum

from .predicates import Point, incircle_det, orient2d
from .trace import LevelCounters

INF = 0
NEXT = (1, 2, 0)
PREV = (2, 0, 1)


class DuplicatePoint(Exception):
    """Raised when inserting a point that is already a vertex."""

    def __init__(self, vertex: int):
        super().__init__(f"point already present as vertex {vertex}")
        self.vertex = vertex


class Phase3Mode(Enum):
    EXACT = "exact"
    MODIFIED = "modified"


_NULL = LevelCounters()


class Triangulation:
    def __init__(self):
        # vertex 0 is the infinite vertex
        self.x = [0]
        self.y = [0]
        self.vtri = [-1]
        self.vstamp = [-1]
        self.vsite = [-1]
        self.valive = [True]
        self._vfree = []
        self.tv = []
        self.tn = []
        self._tfree = []
        self.n = 0
        self.n_finite_tris = 0
        self.dim = -1
        self._line = []

    # ------------------------------------------------------------------
    # storage

    def point(self, v: int) -> Point:
        return Point(self.x[v], self.y[v])

    def vertices(self):
        """Live finite vertex ids."""
        if self.dim < 2:
            return list(self._line)
        va = self.valive
        return [v for v in range(1, len(va)) if va[v]]

    def is_live_vertex(self, v: int) -> bool:
        return 0 < v < len(self.valive) and self.valive[v]

    def _new_vertex(self, p, stamp, site) -> int:
        if self._vfree:
            v = self._vfree.pop()
            self.x[v] = p[0]
            self.y[v] = p[1]
            self.vtri[v] = -1
            self.vstamp[v] = stamp
            self.vsite[v] = site
            self.valive[v] = True
        else:
            v = len(self.x)
            self.x.append(p[0])
            self.y.append(p[1])
            self.vtri.append(-1)
            self.vstamp.append(stamp)
            self.vsite.append(site)
            self.valive.append(True)
        self.n += 1
        return v

    def _kill_vertex(self, v: int) -> None:
        self.valive[v] = False
        self.vtri[v] = -1
        self.vsite[v] = -1
        self._vfree.append(v)
        self.n -= 1

    def _new_tri(self, a: int, b: int, c: int) -> int:
        tv = self.tv
        if self._tfree:
            t = self._tfree.pop()
            b3 = 3 * t
            tv[b3] = a
            tv[b3 + 1] = b
            tv[b3 + 2] = c
        else:
            t = len(tv) // 3
            tv.extend((a, b, c))
            self.tn.extend((-1, -1, -1))
        if a and b and c:
            self.n_finite_tris += 1
        return t

    def _kill_tri(self, t: int) -> None:
        tv = self.tv
        b3 = 3 * t
        if tv[b3] and tv[b3 + 1] and tv[b3 + 2]:
            self.n_finite_tris -= 1
        tv[b3] = tv[b3 + 1] = tv[b3 + 2] = -1
        self._tfree.append(t)

    def is_live_triangle(self, t: int) -> bool:
        return 0 <= t < len(self.tv) // 3 and self.tv[3 * t] != -1

    def is_infinite(self, t: int) -> bool:
        b3 = 3 * t
        tv = self.tv
        return not (tv[b3] and tv[b3 + 1] and tv[b3 + 2])

    def triangle(self, t: int) -> tuple:
        return tuple(self.tv[3 * t:3 * t + 3])

    def live_triangles(self):
        tv = self.tv
        return [t for t in range(len(tv) // 3) if tv[3 * t] != -1]

    def finite_triangles(self):
        tv = self.tv
        out = []
        for t in range(len(tv) // 3):
            b3 = 3 * t
            a, b, c = tv[b3], tv[b3 + 1], tv[b3 + 2]
            if a > 0 and b > 0 and c > 0:
                out.append(t)
        return out

    def _slot(self, t: int, v: int) -> int:
        b3 = 3 * t
        tv = self.tv
        if tv[b3] == v:
            return 0
        if tv[b3 + 1] == v:
            return 1
        return 2

    def _set_adj(self, x: int, p: int, q: int, t: int) -> None:
        """In triangle x, point the neighbor across edge {p, q} to t."""
        b3 = 3 * x
        tv = self.tv
        for j in range(3):
            w = tv[b3 + j]
            if w != p and w != q:
                self.tn[b3 + j] = t
                return
        raise AssertionError("edge not found")

    # ------------------------------------------------------------------
    # construction helpers

    def _build_from_triangles(self, tris) -> None:
        """Create finite triangles, close the hull with infinite ones, link all."""
        tv, tn = self.tv, self.tn
        edges = {}
        made = []
        for a, b, c in tris:
            t = self._new_tri(a, b, c)
            made.append(t)
            edges[(b, c)] = (t, 0)
            edges[(c, a)] = (t, 1)
            edges[(a, b)] = (t, 2)
        for (a, b) in list(edges):
            if (b, a) not in edges:
                t = self._new_tri(b, a, INF)
                edges[(b, a)] = (t, 2)
                edges[(a, INF)] = (t, 0)
                edges[(INF, b)] = (t, 1)
        for (a, b), (t, j) in edges.items():
            tn[3 * t + j] = edges[(b, a)][0]
        for t in range(len(tv) // 3):
            b3 = 3 * t
            if tv[b3] == -1:
                continue
            if self.is_infinite(t):
                self.vtri[INF] = t
        for t in made:
            b3 = 3 * t
            for j in range(3):
                self.vtri[tv[b3 + j]] = t

    def _reset_triangles(self) -> None:
        self.tv = []
        self.tn = []
        self._tfree = []
        self.n_finite_tris = 0
        self.vtri[INF] = -1

    # ------------------------------------------------------------------
    # degenerate (dimension < 2) handling

    def _insert_degenerate(self, p, stamp, site) -> int:
        x, y = self.x, self.y
        for v in self._line:
            if x[v] == p[0] and y[v] == p[1]:
                raise DuplicatePoint(v)
        line = self._line
        if len(line) >= 2:
            a, b = line[0], line[1]
            if orient2d((x[a], y[a]), (x[b], y[b]), p) != 0:
                return self._lift_to_2d(p, stamp, site)
        v = self._new_vertex(p, stamp, site)
        line.append(v)
        self.dim = min(len(line) - 1, 1)
        return v

    def _lift_to_2d(self, p, stamp, site) -> int:
        # collinear sites plus one point off the line: the fan from that
        # point is the unique Delaunay triangulation
        x, y = self.x, self.y
        line = self._line
        a, b = line[0], line[1]
        ax, ay = x[a], y[a]
        dx, dy = x[b] - ax, y[b] - ay
        order = sorted(line, key=lambda u: (x[u] - ax) * dx + (y[u] - ay) * dy)
        v = self._new_vertex(p, stamp, site)
        s, e = order[0], order[-1]
        if orient2d((x[s], y[s]), (x[e], y[e]), p) < 0:
            order.reverse()
        self._line = []
        self.dim = 2
        self._build_from_triangles(
            [(order[i], order[i + 1], v) for i in range(len(order) - 1)])
        return v

    def _drop_to_degenerate(self) -> None:
        live = sorted(self.vertices(), key=lambda v: self.vstamp[v])
        self._reset_triangles()
        for v in live:
            self.vtri[v] = -1
        self._line = live
        self.dim = min(len(live) - 1, 1)

    # ------------------------------------------------------------------
    # insertion

    def insert(self, p, stamp: int, site: int = -1, start: int | None = None,
               counters: LevelCounters | None = None) -> int:
        """Locate p by walking from ``start`` (or a hull vertex) and insert it."""
        if self.dim < 2:
            return self._insert_degenerate(p, stamp, site)
        t = self.locate(p, start, counters)
        return self.insert_located(p, t, stamp, site, counters)

    def insert_located(self, p, t: int, stamp: int, site: int = -1,
                       counters: LevelCounters | None = None) -> int:
        """Insert p, given a triangle t containing it.

        For an infinite t, p must lie strictly outside its hull edge. The
        conflict region (triangles whose closed circumdisk contains p) is
        removed and re-filled by a star from p, so a cocircular site never
        blocks the newcomer.
        """
        if self.dim < 2:
            return self._insert_degenerate(p, stamp, site)
        tv, tn, x, y = self.tv, self.tn, self.x, self.y
        px, py = p[0], p[1]
        b3 = 3 * t
        for j in range(3):
            w = tv[b3 + j]
            if w and x[w] == px and y[w] == py:
                raise DuplicatePoint(w)

        incircle = 0
        incav = {t}
        cav = [t]
        rejected = set()
        boundary = []
        stack = [t]
        while stack:
            u = stack.pop()
            u3 = 3 * u
            for j in range(3):
                nb = tn[u3 + j]
                if nb in incav:
                    continue
                if nb not in rejected:
                    n3 = 3 * nb
                    a, b, c = tv[n3], tv[n3 + 1], tv[n3 + 2]
                    if a and b and c:
                        incircle += 1
                        conflict = incircle_det((x[a], y[a]), (x[b], y[b]),
                                                (x[c], y[c]), p) >= 0
                    else:
                        if a == INF:
                            a, b = b, c
                        elif b == INF:
                            a, b = c, a
                        conflict = _outside_hull_edge(x[a], y[a], x[b], y[b], px, py)
                    if conflict:
                        incav.add(nb)
                        cav.append(nb)
                        stack.append(nb)
                        continue
                    rejected.add(nb)
                boundary.append((tv[u3 + NEXT[j]], tv[u3 + PREV[j]], nb))

        v = self._new_vertex(p, stamp, site)
        for u in cav:
            self._kill_tri(u)
        by_start = {}
        by_end = {}
        made = []
        vtri = self.vtri
        for a, b, nb in boundary:
            T = self._new_tri(a, b, v)
            T3 = 3 * T
            tn[T3 + 2] = nb
            self._set_adj(nb, a, b, T)
            by_start[a] = T
            by_end[b] = T
            made.append(T)
        for T in made:
            T3 = 3 * T
            a, b = tv[T3], tv[T3 + 1]
            tn[T3] = by_start[b]
            tn[T3 + 1] = by_end[a]
            if a and b:
                vtri[a] = T
                vtri[b] = T
                vtri[v] = T
            else:
                vtri[INF] = T
        if counters is not None:
            counters.incircle_tests += incircle
        return v

    # ------------------------------------------------------------------
    # walking

    def any_vertex(self) -> int:
        if self.dim < 2:
            return self._line[-1] if self._line else -1
        t = self.vtri[INF]
        b3 = 3 * t
        return self.tv[b3] or self.tv[b3 + 1]

    def locate(self, q, start: int | None = None,
               counters: LevelCounters | None = None) -> int:
        """Triangle containing q, by turning around ``start`` then walking."""
        if self.dim < 2:
            raise ValueError("no triangles in a degenerate triangulation")
        v = self.any_vertex() if start is None else start
        if self.x[v] == q[0] and self.y[v] == q[1]:
            return self.vtri[v]
        t = self.turn_around(v, q, counters)
        return self.straight_walk(t, v, q, counters)

    def turn_around(self, v: int, q, counters: LevelCounters | None = None) -> int:
        """Triangle incident to v whose wedge at v contains the ray v -> q.

        The rotation direction is chosen by the first orientation test. If the
        ray leaves the hull at v, the infinite triangle whose hull edge sees q
        strictly is returned.
        """
        tv, tn, x, y = self.tv, self.tn, self.x, self.y
        px, py = x[v], y[v]
        qx, qy = q[0], q[1]
        t = self.vtri[v]
        i = self._slot(t, v)
        while not (tv[3 * t] and tv[3 * t + 1] and tv[3 * t + 2]):
            t = tn[3 * t + NEXT[i]]
            i = self._slot(t, v)
        a = tv[3 * t + NEXT[i]]
        tests = 1
        if (x[a] - px) * (qy - py) - (y[a] - py) * (qx - px) >= 0:
            while True:
                b = tv[3 * t + PREV[i]]
                if b == INF:
                    break
                tests += 1
                if (x[b] - px) * (qy - py) - (y[b] - py) * (qx - px) <= 0:
                    break
                t = tn[3 * t + NEXT[i]]
                b3 = 3 * t
                i = 0 if tv[b3] == v else (1 if tv[b3 + 1] == v else 2)
        else:
            while True:
                t = tn[3 * t + PREV[i]]
                b3 = 3 * t
                i = 0 if tv[b3] == v else (1 if tv[b3 + 1] == v else 2)
                c = tv[b3 + NEXT[i]]
                if c == INF:
                    break
                tests += 1
                if (x[c] - px) * (qy - py) - (y[c] - py) * (qx - px) >= 0:
                    break
        if counters is not None:
            counters.phase1_orientation_tests += tests
        return t

    def straight_walk(self, start: int, v: int, q,
                      counters: LevelCounters | None = None) -> int:
        """Walk along the segment from vertex v to q, starting in ``start``.

        ``start`` must be incident to v with its wedge at v containing q (as
        returned by :meth:`turn_around`). Returns the triangle whose closed
        region contains q, or the infinite triangle beyond whose hull edge q
        lies. A vertex lying exactly on the segment is treated as being on its
        left, which keeps the walk moving forward.
        """
        tv, tn, x, y = self.tv, self.tn, self.x, self.y
        t = start
        b3 = 3 * t
        if not (tv[b3] and tv[b3 + 1] and tv[b3 + 2]):
            return t
        px, py = x[v], y[v]
        qx, qy = q[0], q[1]
        i = 0 if tv[b3] == v else (1 if tv[b3 + 1] == v else 2)
        r = tv[b3 + NEXT[i]]
        l = tv[b3 + PREV[i]]
        opp = v
        tests = 0
        crossings = 0
        dqx, dqy = qx - px, qy - py
        while True:
            tests += 1
            rx, ry = x[r], y[r]
            o = (x[l] - rx) * (qy - ry) - (y[l] - ry) * (qx - rx)
            if o > 0:
                break
            if o == 0:
                return self._visibility_walk(t, q, counters, tests, crossings)
            b3 = 3 * t
            j = 0 if tv[b3] == opp else (1 if tv[b3 + 1] == opp else 2)
            t = tn[b3 + j]
            crossings += 1
            b3 = 3 * t
            a0, a1, a2 = tv[b3], tv[b3 + 1], tv[b3 + 2]
            if not (a0 and a1 and a2):
                break
            w = a0 if (a0 != r and a0 != l) else (a1 if (a1 != r and a1 != l) else a2)
            tests += 1
            o = dqx * (y[w] - py) - dqy * (x[w] - px)
            if o > 0:
                opp = l
                l = w
            elif o < 0:
                opp = r
                r = w
            else:
                return self._visibility_walk(t, q, counters, tests, crossings)
        if counters is not None:
            counters.phase2_orientation_tests += tests
            counters.phase2_crossings += crossings
        return t

    def _visibility_walk(self, t: int, q, counters, tests: int = 0, crossings: int = 0) -> int:
        """Cross any edge that has q strictly on its far side until none is left.

        Used when the straight walk meets a vertex or an edge lying on the
        segment. This walk cannot cycle in a Delaunay triangulation; a scan of
        all triangles backs it up anyway.
        """
        tv, tn, x, y = self.tv, self.tn, self.x, self.y
        qx, qy = q[0], q[1]
        limit = len(tv) // 3 + 3
        steps = 0
        while True:
            b3 = 3 * t
            if not (tv[b3] and tv[b3 + 1] and tv[b3 + 2]):
                break
            for j in range(3):
                a, b = tv[b3 + NEXT[j]], tv[b3 + PREV[j]]
                tests += 1
                if (x[b] - x[a]) * (qy - y[a]) - (y[b] - y[a]) * (qx - x[a]) < 0:
                    t = tn[b3 + j]
                    crossings += 1
                    break
            else:
                break
            steps += 1
            if steps > limit:
                t = self._scan_containing(q)
                break
        if counters is not None:
            counters.phase2_orientation_tests += tests
            counters.phase2_crossings += crossings
        return t

    def _scan_containing(self, q) -> int:
        x, y, tv = self.x, self.y, self.tv
        for t in self.live_triangles():
            vs = tv[3 * t:3 * t + 3]
            if INF in vs:
                k = vs.index(INF)
                a, b = vs[NEXT[k]], vs[PREV[k]]
                if _outside_hull_edge(x[a], y[a], x[b], y[b], q[0], q[1]) and \
                        orient2d((x[a], y[a]), (x[b], y[b]), q) > 0:
                    return t
            elif all(orient2d((x[vs[NEXT[j]]], y[vs[NEXT[j]]]),
                              (x[vs[PREV[j]]], y[vs[PREV[j]]]), q) >= 0 for j in range(3)):
                return t
        raise AssertionError("no triangle contains the query")

    # ------------------------------------------------------------------
    # nearest vertex

    def _key(self, v: int, qx: int, qy: int):
        dx = self.x[v] - qx
        dy = self.y[v] - qy
        return (dx * dx + dy * dy, self.vstamp[v])

    def nearest_from_triangle(self, t: int, q, mode: Phase3Mode = Phase3Mode.MODIFIED,
                              counters: LevelCounters | None = None) -> int:
        """Nearest vertex to q, searched from a triangle t containing q.

        MODIFIED: the nearest finite corner of t. EXACT: the true nearest site,
        ties going to the earlier insertion stamp.
        """
        c = counters if counters is not None else LevelCounters()
        if mode is Phase3Mode.MODIFIED:
            tv = self.tv
            b3 = 3 * t
            best = None
            bk = None
            for j in range(3):
                w = tv[b3 + j]
                if w:
                    k = self._key(w, q[0], q[1])
                    c.distance_computations += 1
                    if bk is None or k < bk:
                        best, bk = w, k
            c.phase3_visits += 1
            return best
        best = self._nearest_pruned(t, q, c)
        return self._greedy_descent(best, q, c)

    def _nearest_pruned(self, t: int, q, c: LevelCounters) -> int:
        # from each visited triangle, continue only through the edges incident
        # to its closest corner w, and only where the angle q-w-w' is acute
        tv, tn, x, y = self.tv, self.tn, self.x, self.y
        qx, qy = q[0], q[1]
        dist = {}
        visited = {t}
        stack = [t]
        best = None
        bk = None
        while stack:
            u = stack.pop()
            c.phase3_visits += 1
            u3 = 3 * u
            wslot = -1
            wk = None
            for j in range(3):
                z = tv[u3 + j]
                if not z:
                    continue
                k = dist.get(z)
                if k is None:
                    k = self._key(z, qx, qy)
                    dist[z] = k
                    c.distance_computations += 1
                if wk is None or k < wk:
                    wslot, wk = j, k
            w = tv[u3 + wslot]
            if bk is None or wk < bk:
                best, bk = w, wk
            if wk[0] == 0:
                break
            wx, wy = x[w], y[w]
            for other, across in ((NEXT[wslot], PREV[wslot]), (PREV[wslot], NEXT[wslot])):
                w2 = tv[u3 + other]
                if not w2:
                    continue
                if (qx - wx) * (x[w2] - wx) + (qy - wy) * (y[w2] - wy) <= 0:
                    continue
                nb = tn[u3 + across]
                if nb not in visited:
                    visited.add(nb)
                    stack.append(nb)
        return best

    def _greedy_descent(self, v: int, q, c: LevelCounters) -> int:
        # a vertex with no closer Delaunay neighbor is the nearest site
        qx, qy = q[0], q[1]
        bk = self._key(v, qx, qy)
        while True:
            moved = False
            for w in self.neighbors(v):
                if not w:
                    continue
                k = self._key(w, qx, qy)
                c.distance_computations += 1
                if k < bk:
                    v, bk, moved = w, k, True
                    break
            if not moved:
                return v

    def nearest_linear(self, q, counters: LevelCounters | None = None) -> int:
        best = None
        bk = None
        verts = self.vertices()
        for v in verts:
            k = self._key(v, q[0], q[1])
            if bk is None or k < bk:
                best, bk = v, k
        if counters is not None:
            counters.distance_computations += len(verts)
        return best

    # ------------------------------------------------------------------
    # adjacency queries

    def incident_triangles(self, v: int):
        """Triangles around v in counterclockwise order."""
        tv, tn = self.tv, self.tn
        t0 = t = self.vtri[v]
        out = []
        while True:
            out.append(t)
            i = self._slot(t, v)
            t = tn[3 * t + NEXT[i]]
            if t == t0:
                return out

    def neighbors(self, v: int):
        """Adjacent vertices of v in counterclockwise order (may include INF)."""
        if self.dim < 2:
            return [w for w in self._line if w != v]
        tv = self.tv
        return [tv[3 * t + NEXT[self._slot(t, v)]] for t in self.incident_triangles(v)]

    def degree(self, v: int) -> int:
        return sum(1 for w in self.neighbors(v) if w)

    def hull_size(self) -> int:
        if self.dim < 2:
            return self.n
        return sum(1 for t in self.live_triangles() if self.is_infinite(t))

    # ------------------------------------------------------------------
    # deletion

    def delete_vertex(self, v: int) -> None:
        """Remove vertex v and restore the Delaunay property.

        The hole left by v's star is triangulated by repeatedly cutting a
        convex ear that leaves v strictly inside (each cut is the flip of one
        edge at v, reducing its degree), then Lawson flips restore the empty
        circle property. For a hull vertex the hole is closed by a convex
        hull scan over v's neighbor chain.
        """
        if not self.is_live_vertex(v):
            raise KeyError(v)
        if self.dim < 2:
            self._line.remove(v)
            self._kill_vertex(v)
            self.dim = min(len(self._line) - 1, 1)
            return
        star = self.incident_triangles(v)
        finite_star = sum(1 for t in star if not self.is_infinite(t))
        if self.n - 1 < 3 or (finite_star == self.n_finite_tris
                               and self._rest_collinear(star, v)):
            self._kill_vertex(v)
            self._drop_to_degenerate()
            return

        tv, tn, x, y = self.tv, self.tn, self.x, self.y
        poly = []
        boundary = {}
        for t in star:
            i = self._slot(t, v)
            a = tv[3 * t + NEXT[i]]
            b = tv[3 * t + PREV[i]]
            poly.append(a)
            outer = tn[3 * t + i]
            boundary[(a, b)] = outer
        pv = (x[v], y[v])

        def P(u):
            return (x[u], y[u])

        new = []
        if INF in poly:
            k = poly.index(INF)
            chain = poly[k + 1:] + poly[:k]
            hull = [chain[0]]
            for w in chain[1:]:
                while len(hull) >= 2 and orient2d(P(hull[-2]), P(hull[-1]), P(w)) > 0:
                    new.append((hull[-2], hull[-1], w))
                    hull.pop()
                hull.append(w)
            for s0, s1 in zip(hull, hull[1:]):
                new.append((s0, s1, INF))
        else:
            while len(poly) > 3:
                k = self._flippable_ear(poly, pv)
                if k < 0:
                    k = _plain_ear(poly, P)
                m = len(poly)
                new.append((poly[k - 1], poly[k], poly[(k + 1) % m]))
                del poly[k]
            new.append(tuple(poly))

        for t in star:
            self._kill_tri(t)
        self._kill_vertex(v)

        edges = {}
        made = []
        for a, b, c in new:
            T = self._new_tri(a, b, c)
            made.append(T)
            edges[(b, c)] = (T, 0)
            edges[(c, a)] = (T, 1)
            edges[(a, b)] = (T, 2)
        vtri = self.vtri
        for (a, b), (T, j) in edges.items():
            rev = edges.get((b, a))
            if rev is not None:
                tn[3 * T + j] = rev[0]
            else:
                outer = boundary[(a, b)]
                tn[3 * T + j] = outer
                self._set_adj(outer, a, b, T)
        made.sort(key=lambda T: not self.is_infinite(T))
        for T in made:
            vtri[tv[3 * T]] = vtri[tv[3 * T + 1]] = vtri[tv[3 * T + 2]] = T
        self._lawson([(T, j) for T in made for j in range(3)])

    def _flippable_ear(self, poly, pv) -> int:
        # ear at b is cut by flipping edge v-b: the quad v, a, b, c must be
        # strictly convex; on the last quad v may lie on the diagonal
        x, y = self.x, self.y
        m = len(poly)
        for k in range(m):
            a, b, c = poly[k - 1], poly[k], poly[(k + 1) % m]
            pa, pc = (x[a], y[a]), (x[c], y[c])
            if orient2d(pa, (x[b], y[b]), pc) > 0:
                o = orient2d(pa, pc, pv)
                if o > 0 or (o == 0 and m == 4):
                    return k
        return -1

    def _rest_collinear(self, star, v) -> bool:
        # every finite triangle touches v, so the other sites are v's neighbors
        x, y = self.x, self.y
        pts = [(x[w], y[w]) for w in self.neighbors(v) if w]
        a, b = pts[0], pts[1]
        return all(orient2d(a, b, p) == 0 for p in pts[2:])

    def _lawson(self, stack) -> int:
        tv, tn, x, y = self.tv, self.tn, self.x, self.y
        flips = 0
        while stack:
            t, j = stack.pop()
            b3 = 3 * t
            if tv[b3] == -1:
                continue
            a, b, c = tv[b3 + j], tv[b3 + NEXT[j]], tv[b3 + PREV[j]]
            if not (a and b and c):
                continue
            u = tn[b3 + j]
            u3 = 3 * u
            k = 0 if tn[u3] == t else (1 if tn[u3 + 1] == t else 2)
            d = tv[u3 + k]
            if not d:
                continue
            if incircle_det((x[a], y[a]), (x[b], y[b]), (x[c], y[c]), (x[d], y[d])) > 0:
                self._flip(t, j, u, k)
                flips += 1
                stack.extend(((t, 0), (t, 2), (u, 0), (u, 1)))
        return flips

    def _flip(self, t: int, j: int, u: int, k: int) -> None:
        """Flip the edge shared by t (opposite slot j) and u (opposite slot k)."""
        tv, tn = self.tv, self.tn
        b3, u3 = 3 * t, 3 * u
        a, b, c = tv[b3 + j], tv[b3 + NEXT[j]], tv[b3 + PREV[j]]
        d = tv[u3 + k]
        n_b = tn[b3 + NEXT[j]]
        n_c = tn[b3 + PREV[j]]
        m_c = tn[u3 + NEXT[k]]
        m_b = tn[u3 + PREV[k]]
        tv[b3], tv[b3 + 1], tv[b3 + 2] = a, b, d
        tn[b3], tn[b3 + 1], tn[b3 + 2] = m_c, u, n_c
        tv[u3], tv[u3 + 1], tv[u3 + 2] = a, d, c
        tn[u3], tn[u3 + 1], tn[u3 + 2] = m_b, n_b, t
        self._set_adj(m_c, b, d, t)
        self._set_adj(n_b, c, a, u)
        vtri = self.vtri
        vtri[a] = t
        vtri[b] = t
        vtri[d] = t
        vtri[c] = u

    # ------------------------------------------------------------------
    # inspection

    def edges(self):
        """Finite edges as a set of sorted point pairs."""
        x, y = self.x, self.y
        out = set()
        if self.dim < 2:
            line = sorted(self._line, key=lambda v: (x[v], y[v]))
            for a, b in zip(line, line[1:]):
                out.add(((x[a], y[a]), (x[b], y[b])))
            return out
        tv = self.tv
        for t in self.finite_triangles():
            b3 = 3 * t
            for j in range(3):
                a, b = tv[b3 + j], tv[b3 + NEXT[j]]
                pa, pb = (x[a], y[a]), (x[b], y[b])
                out.add((pa, pb) if pa < pb else (pb, pa))
        return out

    def dump(self) -> str:
        """One line per live triangle: ``tid: v0 v1 v2 | n0 n1 n2``."""
        lines = []
        for t in self.live_triangles():
            vs = " ".join("INF" if w == INF else str(w) for w in self.tv[3 * t:3 * t + 3])
            ns = " ".join(str(u) for u in self.tn[3 * t:3 * t + 3])
            lines.append(f"{t}: {vs} | {ns}")
        return "\n".join(lines)

    def validate(self, full: bool = False) -> list:
        """List of invariant violations; empty when the structure is healthy.

        Checks adjacency symmetry, orientation, vertex links, Euler counts and
        the local empty-circle condition on every interior edge (equivalent to
        the global one). ``full=True`` also tests every site against every
        circumcircle.
        """
        from .validation import validate_triangulation
        return validate_triangulation(self, full)


def _plain_ear(poly, P) -> int:
    """Index of an ear of a simple ccw polygon (no other vertex in its closed triangle)."""
    m = len(poly)
    pts = [P(w) for w in poly]
    for k in range(m):
        a, b, c = pts[k - 1], pts[k], pts[(k + 1) % m]
        if orient2d(a, b, c) <= 0:
            continue
        blocked = False
        for i, p in enumerate(pts):
            if i in (k, (k - 1) % m, (k + 1) % m) or p in (a, b, c):
                continue
            if orient2d(a, b, p) >= 0 and orient2d(b, c, p) >= 0 and orient2d(c, a, p) >= 0:
                blocked = True
                break
        if not blocked:
            return k
    raise AssertionError("polygon has no ear")


def _outside_hull_edge(ax, ay, bx, by, px, py) -> bool:
    # p strictly on the unbounded side of hull edge a->b, or strictly inside
    # the segment ab
    o = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
    if o > 0:
        return True
    if o < 0:
        return False
    return (px - ax) * (px - bx) + (py - ay) * (py - by) < 0
