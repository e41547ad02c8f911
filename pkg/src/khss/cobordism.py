"""Dotted cobordisms between crossingless tangles, for the (c, 0) theory.

Objects are crossingless matchings without closed circles: sorted tuples of
arcs ``(p, q)`` with ``p < q`` over integer boundary points.  A morphism
``A -> B`` is a dict ``{frozenset(dotted loop ids): coefficient}``, where the
loops are the closed curves of ``A`` and ``B`` glued along their common
boundary points and a loop is named by its smallest point.  Every basis
element is a disjoint union of disks, one per loop, each with at most one
dot.  This is a complete description after neck cutting:

* a connected surface of genus g with k dots whose boundary is m loops equals
  Delta^(m)(X^k (2X - c)^g), expanded on the basis {1, X} per loop;
* a closed component evaluates through the counit.
"""

from __future__ import annotations

from .frobenius import delta_power, mul_pair


def points(obj) -> set:
    s = set()
    for p, q in obj:
        s.add(p)
        s.add(q)
    return s


def partner_map(obj) -> dict:
    m = {}
    for p, q in obj:
        m[p] = q
        m[q] = p
    return m


def identity(obj, one) -> dict:
    return {frozenset(): one}


class Engine:
    """Caches the topology of compositions and joins for one ring."""

    def __init__(self, R):
        self.R = R
        self.c = R.c
        self.zero = R.zero
        self.one = R.one
        self._loops = {}
        self._join = {}
        self._vplan = {}
        self._hplan = {}
        self._elem = {}
        self._expand = {}

    # -- elementary topology

    def loops(self, A, B) -> dict:
        """point -> loop id for the closure of A and B."""
        key = (A, B)
        r = self._loops.get(key)
        if r is not None:
            return r
        pa, pb = partner_map(A), partner_map(B)
        r = {}
        for p in sorted(pa):
            if p in r:
                continue
            cyc = []
            cur = p
            while True:
                cyc.append(cur)
                q = pa[cur]
                cyc.append(q)
                cur = pb[q]
                if cur == p:
                    break
            lid = min(cyc)
            for x in cyc:
                r[x] = lid
        self._loops[key] = r
        return r

    def join_objects(self, A1, A2):
        """Glue two tangles along common points: ``(object, circles)``.

        Circles are returned as tuples of (shared) points, ordered by their
        smallest point.
        """
        key = (A1, A2)
        r = self._join.get(key)
        if r is not None:
            return r
        p1, p2 = partner_map(A1), partner_map(A2)
        shared = set(p1) & set(p2)
        seen = set()
        arcs = []
        for p in sorted(set(p1) ^ set(p2)):
            if p in seen:
                continue
            seen.add(p)
            side = p1 if p in p1 else p2
            cur = p
            while True:
                q = side[cur]
                seen.add(q)
                if q in shared:
                    side = p2 if side is p1 else p1
                    cur = q
                    continue
                break
            arcs.append((p, q) if p < q else (q, p))
        circles = []
        for s in sorted(shared):
            if s in seen:
                continue
            cyc = []
            cur = s
            side = p1
            while True:
                seen.add(cur)
                cyc.append(cur)
                cur = side[cur]
                side = p2 if side is p1 else p1
                if cur == s and side is p1:
                    break
            circles.append(tuple(sorted(set(cyc))))
        r = (tuple(sorted(arcs)), tuple(circles))
        self._join[key] = r
        return r

    # -- algebra of components

    def element(self, k: int, g: int, extra=None):
        """X^k (2X - c)^g times ``extra`` (a pair), as a pair (u, v)."""
        key = (k, g, extra)
        r = self._elem.get(key)
        if r is not None:
            return r
        c = self.c
        if k == 0:
            u, v = self.one, self.zero
        else:
            u, v = self.zero, c ** (k - 1) if k > 1 else self.one
        if g:
            f = c ** (2 * (g // 2)) if g >= 2 else self.one
            if g % 2:
                u, v = mul_pair(u, v, -c * f, 2 * f, c)
            else:
                u, v = u * f, v * f
        if extra is not None:
            u, v = mul_pair(u, v, extra[0], extra[1], c)
        r = (u, v)
        self._elem[key] = r
        return r

    def expand(self, u, v, loops: tuple):
        """Delta^(m)(u + vX) on the given loops: list of (dotted tuple, coeff)."""
        m = len(loops)
        key = (u, v, loops)
        r = self._expand.get(key)
        if r is not None:
            return r
        c = self.c
        out = []
        if m == 1:
            if u:
                out.append(((), u))
            if v:
                out.append((loops, v))
        else:
            for mask in range(1 << m):
                dotted = tuple(l for i, l in enumerate(loops) if mask >> i & 1)
                a = delta_power(u, v, m, len(dotted), c)
                if a:
                    out.append((dotted, a))
        self._expand[key] = out
        return out

    # -- vertical composition

    def _vertical_plan(self, A, B, C):
        key = (A, B, C)
        plan = self._vplan.get(key)
        if plan is not None:
            return plan
        lf = self.loops(A, B)
        lg = self.loops(B, C)
        lr = self.loops(A, C)
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for l in set(lf.values()):
            parent[("f", l)] = ("f", l)
        for l in set(lg.values()):
            parent[("g", l)] = ("g", l)
        for p, q in B:
            a, b = find(("f", lf[p])), find(("g", lg[p]))
            if a != b:
                parent[a] = b
        roots = {}
        chi = {}
        for node in parent:
            r = find(node)
            roots.setdefault(r, len(roots))
        for node in parent:
            i = roots[find(node)]
            chi[i] = chi.get(i, 0) + 1
        for p, q in B:
            i = roots[find(("f", lf[p]))]
            chi[i] -= 1
        res = {}
        for lid in sorted(set(lr.values())):
            i = roots[find(("f", lf[lid]))]
            res.setdefault(i, []).append(lid)
        comps = []
        for i in range(len(roots)):
            ls = tuple(res.get(i, ()))
            twice_g = 2 - chi[i] - len(ls)
            assert twice_g >= 0 and twice_g % 2 == 0
            comps.append((twice_g // 2, ls))
        fmap = {l: roots[find(("f", l))] for l in set(lf.values())}
        gmap = {l: roots[find(("g", l))] for l in set(lg.values())}
        plan = (fmap, gmap, comps)
        self._vplan[key] = plan
        return plan

    def compose(self, g: dict, f: dict, A, B, C) -> dict:
        """``g o f`` for ``f: A -> B`` and ``g: B -> C``."""
        fmap, gmap, comps = self._vertical_plan(A, B, C)
        return self._evaluate(f, g, fmap, gmap, comps, None)

    def _evaluate(self, f1, f2, map1, map2, comps, extras):
        out = {}
        ncomp = len(comps)
        element = self.element
        expand = self.expand
        for d1, a1 in f1.items():
            for d2, a2 in f2.items():
                dots = [0] * ncomp
                for l in d1:
                    dots[map1[l]] += 1
                for l in d2:
                    dots[map2[l]] += 1
                coef = a1 * a2
                terms = [((), coef)]
                for i in range(ncomp):
                    genus, ls = comps[i]
                    u, v = element(dots[i], genus, extras[i] if extras else None)
                    if not ls:
                        if not v:
                            terms = []
                            break
                        terms = [(t, a * v) for t, a in terms]
                        continue
                    ex = expand(u, v, ls)
                    if not ex:
                        terms = []
                        break
                    if len(ex) == 1:
                        dt, b = ex[0]
                        terms = [(t + dt, a * b) for t, a in terms]
                    else:
                        terms = [(t + dt, a * b) for t, a in terms for dt, b in ex]
                for t, a in terms:
                    k = frozenset(t)
                    v = out.get(k)
                    if v is None:
                        out[k] = a
                    else:
                        v = v + a
                        if v:
                            out[k] = v
                        else:
                            del out[k]
        return {k: v for k, v in out.items() if v}

    # -- horizontal join

    def join_plan(self, A1, B1, A2, B2):
        """Topology of ``f1 (x) f2`` for ``f1: A1 -> B1`` and ``f2: A2 -> B2``.

        The joined source and target may contain closed circles; the plan
        records which component each circle's cup/cap disk falls into.
        """
        key = (A1, B1, A2, B2)
        plan = self._hplan.get(key)
        if plan is not None:
            return plan
        l1 = self.loops(A1, B1)
        l2 = self.loops(A2, B2)
        Os, cs = self.join_objects(A1, A2)
        Ot, ct = self.join_objects(B1, B2)
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            a, b = find(a), find(b)
            if a != b:
                parent[a] = b

        for l in set(l1.values()):
            parent[(1, l)] = (1, l)
        for l in set(l2.values()):
            parent[(2, l)] = (2, l)
        for i in range(len(cs)):
            parent[("s", i)] = ("s", i)
        for i in range(len(ct)):
            parent[("t", i)] = ("t", i)
        shared = set(l1) & set(l2)
        for p in shared:
            union((1, l1[p]), (2, l2[p]))
        for i, circ in enumerate(cs):
            union(("s", i), (1, l1[circ[0]]))
        for i, circ in enumerate(ct):
            union(("t", i), (1, l1[circ[0]]))
        roots = {}
        for node in parent:
            roots.setdefault(find(node), len(roots))
        chi = [0] * len(roots)
        for node in parent:
            chi[roots[find(node)]] += 1
        for p in shared:
            chi[roots[find((1, l1[p]))]] -= 1
        lr = self.loops(Os, Ot)
        res = {}
        for lid in sorted(set(lr.values())):
            node = (1, l1[lid]) if lid in l1 else (2, l2[lid])
            res.setdefault(roots[find(node)], []).append(lid)
        comps = []
        for i in range(len(roots)):
            ls = tuple(res.get(i, ()))
            twice_g = 2 - chi[i] - len(ls)
            assert twice_g >= 0 and twice_g % 2 == 0
            comps.append((twice_g // 2, ls))
        map1 = {l: roots[find((1, l))] for l in set(l1.values())}
        map2 = {l: roots[find((2, l))] for l in set(l2.values())}
        cup_comp = [roots[find(("s", i))] for i in range(len(cs))]
        cap_comp = [roots[find(("t", i))] for i in range(len(ct))]
        plan = (Os, cs, Ot, ct, map1, map2, comps, cup_comp, cap_comp)
        self._hplan[key] = plan
        return plan

    def join_eval(self, plan, f1, f2, cup_factors, cap_factors) -> dict:
        """Evaluate ``cap o (f1 (x) f2) o cup`` with one algebra factor per circle."""
        _, _, _, _, map1, map2, comps, cup_comp, cap_comp = plan
        if cup_comp or cap_comp:
            extras = [None] * len(comps)
            c = self.c
            for i, fac in zip(cup_comp, cup_factors):
                extras[i] = fac if extras[i] is None else mul_pair(*extras[i], *fac, c)
            for i, fac in zip(cap_comp, cap_factors):
                extras[i] = fac if extras[i] is None else mul_pair(*extras[i], *fac, c)
        else:
            extras = None
        return self._evaluate(f1, f2, map1, map2, comps, extras)
