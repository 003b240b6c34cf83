"""Stage B: the degree-276 and degree-176 groups.

Vertices 0..275: points 0..22 of the S(4,7,23) Steiner system, then its
253 blocks in sorted order.  The McLaughlin graph lives on the 275
vertices other than point 0; adding point 0 as an isolated vertex gives
a representative of the regular two-graph on 276 vertices, whose full
automorphism group is Co3.

The natural M23 action preserves the two-graph (it maps the graph to a
switching-equivalent one).  One extra automorphism is produced by
switching the graph so that a block vertex becomes isolated and finding
an explicit isomorphism back; together they generate Co3.  Everything
downstream (HS, McL.2, the involution-centralizer style subgroups) is
cut out of Co3 with set stabilizers, and every order and orbit shape is
asserted against independently known values.
"""

import random
from collections import Counter

from permtools import (
    compose,
    inverse,
    perm_order,
    entry,
    restrict_all,
    check_2transitive,
)

CO3_ORDER = 495766656000
HS_ORDER = 44352000


def bits_of(m):
    while m:
        b = m & -m
        yield b.bit_length() - 1
        m ^= b


def build_mcl_rows(blocks):
    """Adjacency rows (bitmask per vertex) of McL graph + isolated 0."""
    n = 23 + len(blocks)
    assert n == 276
    rows = [0] * n
    has0 = [0 in b for b in blocks]

    def link(u, v):
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    for q in range(1, 23):
        for i, b in enumerate(blocks):
            if has0[i]:
                if q not in b:
                    link(q, 23 + i)
            else:
                if q in b:
                    link(q, 23 + i)
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            t = len(blocks[i] & blocks[j])
            if has0[i] == has0[j]:
                if t == 1:
                    link(23 + i, 23 + j)
            else:
                if t == 3:
                    link(23 + i, 23 + j)
    assert rows[0] == 0
    for v in range(1, n):
        assert rows[v].bit_count() == 112, (v, rows[v].bit_count())
    # strongly regular (275, 112, 30, 56) on the non-isolated part
    for u in range(1, n):
        for v in range(u + 1, n):
            c = (rows[u] & rows[v]).bit_count()
            if (rows[u] >> v) & 1:
                assert c == 30, (u, v, c)
            else:
                assert c == 56, (u, v, c)
    return rows


def permuted_rows(rows, g):
    n = len(rows)
    out = [0] * n
    for u in range(n):
        acc = 0
        for v in bits_of(rows[u]):
            acc |= 1 << g[v]
        out[g[u]] = acc
    return out


def is_switching_equivalent(rows_a, rows_b):
    """True iff the symmetric difference is complete bipartite S x (V-S)."""
    n = len(rows_a)
    diff = [rows_a[u] ^ rows_b[u] for u in range(n)]
    full = (1 << n) - 1
    s = diff[0]
    for u in range(n):
        if (s >> u) & 1:
            want = (full ^ s) & ~(1 << u)
        else:
            want = s & ~(1 << u)
        if diff[u] != want:
            return False
    return True


def switch(rows, s):
    n = len(rows)
    full = (1 << n) - 1
    out = []
    for u in range(n):
        if (s >> u) & 1:
            out.append(rows[u] ^ ((full ^ s) & ~(1 << u)))
        else:
            out.append(rows[u] ^ s)
    return out


def find_isomorphism(rows_a, rows_b):
    """Permutation p with u~v in A iff p[u]~p[v] in B, by refinement."""
    n = len(rows_a)

    def cell_mask(cell):
        m = 0
        for v in cell:
            m |= 1 << v
        return m

    def refine(ca, cb):
        changed = True
        while changed:
            changed = False
            for s in range(len(ca)):
                ma = cell_mask(ca[s])
                mb = cell_mask(cb[s])
                for i in range(len(ca)):
                    if len(ca[i]) == 1:
                        continue
                    da, db = {}, {}
                    for v in ca[i]:
                        da.setdefault((rows_a[v] & ma).bit_count(), []).append(v)
                    for v in cb[i]:
                        db.setdefault((rows_b[v] & mb).bit_count(), []).append(v)
                    ka = sorted((k, len(vs)) for k, vs in da.items())
                    kb = sorted((k, len(vs)) for k, vs in db.items())
                    if ka != kb:
                        return False
                    if len(da) > 1:
                        keys = sorted(da)
                        ca[i : i + 1] = [sorted(da[k]) for k in keys]
                        cb[i : i + 1] = [sorted(db[k]) for k in keys]
                        changed = True
                        break
                if changed:
                    break
        return True

    def verify(p):
        for u in range(n):
            acc = 0
            for v in bits_of(rows_a[u]):
                acc |= 1 << p[v]
            if acc != rows_b[p[u]]:
                return False
        return True

    def search(ca, cb):
        ca = [list(c) for c in ca]
        cb = [list(c) for c in cb]
        if not refine(ca, cb):
            return None
        tgt = None
        for i in range(len(ca)):
            if len(ca[i]) > 1 and (tgt is None or len(ca[i]) < len(ca[tgt])):
                tgt = i
        if tgt is None:
            p = [0] * n
            for i in range(len(ca)):
                p[ca[i][0]] = cb[i][0]
            return p if verify(p) else None
        va = ca[tgt][0]
        rest_a = [v for v in ca[tgt] if v != va]
        for vb in cb[tgt]:
            rest_b = [v for v in cb[tgt] if v != vb]
            na = ca[: tgt] + [[va], rest_a] + ca[tgt + 1 :]
            nb = cb[: tgt] + [[vb], rest_b] + cb[tgt + 1 :]
            got = search(na, nb)
            if got is not None:
                return got
        return None

    by_deg_a, by_deg_b = {}, {}
    for v in range(n):
        by_deg_a.setdefault(rows_a[v].bit_count(), []).append(v)
        by_deg_b.setdefault(rows_b[v].bit_count(), []).append(v)
    assert sorted((d, len(vs)) for d, vs in by_deg_a.items()) == sorted(
        (d, len(vs)) for d, vs in by_deg_b.items()
    )
    degs = sorted(by_deg_a)
    return search([by_deg_a[d] for d in degs], [by_deg_b[d] for d in degs])


def pow_perm(p, e):
    n = len(p)
    out = list(range(n))
    base = list(p)
    while e:
        if e & 1:
            out = compose(out, base)
        base = compose(base, base)
        e >>= 1
    return out


def fixed_points(p):
    return [i for i in range(len(p)) if p[i] == i]


def build(calc, aux, verbose=print):
    log = verbose
    blocks = sorted((frozenset(b) for b in aux["blocks23"]), key=sorted)
    assert len(blocks) == 253
    block_index = {b: 23 + i for i, b in enumerate(blocks)}

    rows = build_mcl_rows(blocks)
    log("McLaughlin graph verified: SRG(275,112,30,56) plus isolated vertex")

    def lift24(g):
        p = [0] * 276
        for q in range(23):
            p[q] = g[q]
        for i, b in enumerate(blocks):
            p[23 + i] = block_index[frozenset(g[x] for x in b)]
        assert sorted(p) == list(range(276))
        return p

    m23a, m23b = (lift24(g) for g in aux["m23_24"])
    assert calc.orbit_sizes([m23a, m23b]) == [23, 253]
    for g in (m23a, m23b):
        assert is_switching_equivalent(permuted_rows(rows, g), rows)
    log("M23 action on 276 vertices preserves the two-graph")

    u0 = 23
    switched = switch(rows, rows[u0])
    assert switched[u0] == 0
    psi = find_isomorphism(switched, rows)
    assert psi is not None, "no isomorphism back after switching"
    assert psi[u0] == 0
    assert is_switching_equivalent(permuted_rows(rows, psi), rows)
    log("extra two-graph automorphism found (switch at", u0, "and re-identify)")

    co3 = [m23a, m23b, psi]
    co3_order = calc.order(co3)
    assert co3_order == CO3_ORDER, co3_order
    assert check_2transitive(calc, co3, co3_order)
    log("Co3 verified: order", co3_order, "2-transitive on 276")

    gamma100 = sorted(set(range(23)) | {23 + i for i, b in enumerate(blocks) if 0 in b})
    assert len(gamma100) == 100
    omega176 = sorted(set(range(276)) - set(gamma100))

    hs276, hs_ord, hs_orbit = calc.orbit_stab(co3, co3_order, gamma100)
    assert (hs_ord, hs_orbit) == (HS_ORDER, 11178), (hs_ord, hs_orbit)
    assert calc.orbit_sizes(hs276) == [100, 176]
    log("HS located as the stabilizer of a 100-set, orbit size 11178")

    mcl2, mcl2_ord = calc.point_stab(co3, 0, order=co3_order)
    assert mcl2_ord == 1796256000
    assert calc.orbit_sizes(mcl2) == [1, 275]

    u43, u43_ord, u43_orbit = calc.orbit_stab(co3, co3_order, [0, 1])
    assert (u43_ord, u43_orbit) == (13063680, 37950)
    # pair stabilizer: the point pair plus the rank-3 suborbits of McL.2
    assert calc.orbit_sizes(u43) == [2, 112, 162]
    log("McL.2 and U4(3).2^2 verified")

    rng = random.Random(20260823)
    gen_pool = co3 + [inverse(g) for g in co3]

    def rand_elem():
        p = gen_pool[rng.randrange(len(gen_pool))]
        for _ in range(rng.randint(2, 13)):
            p = compose(p, gen_pool[rng.randrange(len(gen_pool))])
        return p

    inv36 = inv12 = ord3fix6 = None
    seen_fix = Counter()
    for _ in range(4000):
        if inv36 is not None and inv12 is not None and ord3fix6 is not None:
            break
        e = rand_elem()
        m = perm_order(e)
        if m % 2 == 0:
            t = pow_perm(e, m // 2)
            f = len(fixed_points(t))
            seen_fix["2:%d" % f] += 1
            if f == 36 and inv36 is None:
                inv36 = t
            if f == 12 and inv12 is None:
                inv12 = t
        if m % 3 == 0:
            t = pow_perm(e, m // 3)
            f = len(fixed_points(t))
            seen_fix["3:%d" % f] += 1
            if f == 6 and ord3fix6 is None:
                ord3fix6 = t
    assert inv36 is not None, seen_fix
    assert inv12 is not None, seen_fix
    assert ord3fix6 is not None, seen_fix
    log("representative elements found (fixed-point counts 36 / 12 / 6)")

    s62, s62_ord, s62_orbit = calc.orbit_stab(co3, co3_order, fixed_points(inv36))
    assert (s62_ord, s62_orbit) == (2903040, 170775), (s62_ord, s62_orbit)
    assert calc.orbit_sizes(s62) == [36, 240]
    log("2.S6(2) verified as stabilizer of a 36-point fixed set")

    heis, heis_ord, heis_orbit = calc.orbit_stab(co3, co3_order, fixed_points(ord3fix6))
    assert (heis_ord, heis_orbit) == (699840, 708400), (heis_ord, heis_orbit)
    assert calc.orbit_sizes(heis) == [6, 270]
    log("3^(1+4):4S6 verified as stabilizer of a 6-point fixed set")

    m12x2, m12x2_ord, m12x2_orbit = calc.orbit_stab(co3, co3_order, fixed_points(inv12))
    assert (m12x2_ord, m12x2_orbit) == (190080, 2608200), (m12x2_ord, m12x2_orbit)
    # the central involution splits the 264 moved points into two halves
    assert calc.orbit_sizes(m12x2) == [12, 132, 132]
    log("2xM12 verified as stabilizer of a 12-point fixed set")

    # Hunt a 50-subset of the 176-orbit whose HS-orbit has just 176
    # members: intersect random Co3-images of the 100-set with the
    # 176-set and keep candidates of size 50 whose orbit closes early.
    g100 = set(gamma100)
    o176 = set(omega176)
    hist = Counter()
    quad = None
    for _ in range(8000):
        x = rand_elem()
        t = {x[v] for v in g100} & o176
        hist[len(t)] += 1
        if len(t) != 50:
            continue
        seen = {frozenset(t)}
        queue = [frozenset(t)]
        small = True
        while queue and small:
            s = queue.pop()
            for g in hs276:
                img = frozenset(g[v] for v in s)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
                    if len(seen) > 176:
                        small = False
                        break
        if small and len(seen) == 176:
            quad = sorted(t)
            break
    assert quad is not None, dict(hist)
    log("quadric 50-set found; intersection-size histogram", dict(hist))

    u3b276, u3b_ord, u3b_orbit = calc.orbit_stab(hs276, HS_ORDER, quad)
    assert (u3b_ord, u3b_orbit) == (252000, 176), (u3b_ord, u3b_orbit)

    gamma126 = sorted(o176 - set(quad))
    u35s3, u35s3_ord, u35s3_orbit = calc.orbit_stab(co3, co3_order, gamma126)
    assert (u35s3_ord, u35s3_orbit) == (756000, 655776), (u35s3_ord, u35s3_orbit)
    assert calc.orbit_sizes(u35s3) == [126, 150]
    log("U3(5):2 (in HS) and U3(5):S3 (in Co3) verified")

    # Degree-176 groups: restrict to the 176-orbit.
    m23_24 = aux["m23_24"]
    m22p, m22p_ord = calc.point_stab(m23_24, 0, order=10200960)
    assert m22p_ord == 443520
    l34, l34_ord = calc.point_stab(m22p, 1, order=443520)
    assert l34_ord == 20160
    hexad = min((b - {0} for b in blocks if 0 in b), key=sorted)
    hexstab, hexstab_ord, hex_orbit = calc.orbit_stab(m22p, 443520, sorted(hexad))
    assert (hexstab_ord, hex_orbit) == (5760, 77)

    gamma56 = sorted(
        23 + i for i, b in enumerate(blocks) if 0 not in b and 1 in b
    )
    assert len(gamma56) == 56
    l342_276, l342_ord, l342_orbit = calc.orbit_stab(hs276, HS_ORDER, gamma56)
    assert (l342_ord, l342_orbit) == (40320, 1100), (l342_ord, l342_orbit)
    log("L3(4).2 verified as 56-set stabilizer, orbit size 1100")

    hs176 = restrict_all(hs276, omega176)
    assert calc.order(hs176) == HS_ORDER
    assert check_2transitive(calc, hs176, HS_ORDER)
    m22_176 = restrict_all([lift24(g) for g in m22p], omega176)
    assert calc.order(m22_176) == 443520
    assert calc.orbit_sizes(m22_176) == [176]
    l34_176 = restrict_all([lift24(g) for g in l34], omega176)
    assert calc.order(l34_176) == 20160
    assert calc.orbit_sizes(l34_176) == [56, 120]
    hex_176 = restrict_all([lift24(g) for g in hexstab], omega176)
    assert calc.order(hex_176) == 5760
    assert calc.orbit_sizes(hex_176) == [80, 96]
    u3a_176, u3a_ord = calc.point_stab(hs176, 0, order=HS_ORDER)
    assert u3a_ord == 252000
    assert calc.orbit_sizes(u3a_176) == [1, 175]
    u3b_176 = restrict_all(u3b276, omega176)
    assert calc.order(u3b_176) == 252000
    assert calc.orbit_sizes(u3b_176) == [50, 126]
    l342_176 = restrict_all(l342_276, omega176)
    assert calc.order(l342_176) == 40320
    assert calc.orbit_sizes(l342_176) == [56, 120]
    log("degree-176 restrictions verified")

    m22_entry = entry(
        "M22",
        m22_176,
        443520,
        False,
        children=[
            entry("L3(4)", l34_176, 20160, False),
            entry("2^4:A6", hex_176, 5760, False),
        ],
    )
    hs_entry = entry(
        "HS",
        hs176,
        HS_ORDER,
        True,
        children=[
            m22_entry,
            entry("U3(5):2a", u3a_176, 252000, False),
            entry("U3(5):2b", u3b_176, 252000, False),
            entry("L3(4).2", l342_176, 40320, False),
        ],
    )
    co3_entry = entry(
        "Co3",
        co3,
        CO3_ORDER,
        True,
        children=[
            entry("McL.2", mcl2, 1796256000, False),
            entry("HS", hs276, HS_ORDER, False),
            entry("U4(3).2^2", u43, 13063680, False),
            entry("M23", [m23a, m23b], 10200960, False),
            entry("2.S6(2)", s62, 2903040, False),
            entry("U3(5):S3", u35s3, 756000, False),
            entry("3^(1+4):4S6", heis, 699840, False),
            entry("2xM12", m12x2, 190080, False),
        ],
    )
    return {"HS": hs_entry, "Co3": co3_entry}
