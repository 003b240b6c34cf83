"""Catalog construction for the degree <= 28 groups.

M24 is generated from the projective action of PSL(2,23) plus one extra
permutation found by scanning the classical one-parameter family for a map
preserving the octads.  Every other group here is cut out of M24 by point,
pair, or set stabilizers, all verified against known orders by the C++
stabilizer-chain tool.
"""

import golay
from permtools import (
    closure,
    compose,
    check_2transitive,
    entry,
    image_of_set,
    inverse,
    perm_order,
    restrict_all,
    set_orbit_transporter,
)

QR23 = {pow(i, 2, 23) for i in range(1, 23)}


def psl2_23_gens():
    s = tuple(list((i + 1) % 23 for i in range(23)) + [23])
    t = [0] * 24
    t[0] = 23
    t[23] = 0
    for i in range(1, 23):
        t[i] = (-pow(i, -1, 23)) % 23
    return s, tuple(t)


def find_m24_generator(octad_set):
    """Scan maps y -> a*y^3 (y a residue), y -> b*y^3 (y a non-residue),
    fixing 0 and infinity, for one preserving the octads."""
    for a in range(1, 23):
        for b in range(1, 23):
            img = [0] * 24
            img[23] = 23
            for y in range(1, 23):
                c = a if y in QR23 else b
                img[y] = (c * pow(y, 3, 23)) % 23
            if len(set(img)) != 24:
                continue
            p = tuple(img)
            if all(image_of_set(p, o) in octad_set for o in octad_set):
                return p
    raise RuntimeError("no octad-preserving cubing map found")


def preserves(p, family):
    fam = set(family)
    return all(image_of_set(p, s) in fam for s in family)


def build(calc, verbose=print):
    data = golay.build()
    octads = data["octads"]
    octad_set = set(octads)
    dodecads = data["dodecads"]

    s, t = psl2_23_gens()
    assert preserves(s, octad_set) and preserves(t, octad_set)
    delta = find_m24_generator(octad_set)
    verbose("extra M24 generator found")

    m24 = [s, t, delta]
    m24_order = calc.order(m24)
    assert m24_order == 244823040, m24_order
    assert check_2transitive(calc, m24, m24_order)
    verbose("M24 verified, order", m24_order)

    # --- point-stabilizer ladder: M23, M22, L3(4) ---------------------------
    m23_24, m23_order = calc.point_stab(m24, 23, m24_order)
    assert m23_order == 10200960
    m22_24, m22_order = calc.point_stab(m23_24, 22, m23_order)
    assert m22_order == 443520
    l34_24, l34_order = calc.point_stab(m22_24, 21, m22_order)
    assert l34_order == 20160

    # --- M22.2: setwise stabilizer of {22,23} -------------------------------
    m222_24, m222_order, pair_orbit = calc.orbit_stab(m24, m24_order, {22, 23})
    assert m222_order == 887040 and pair_orbit == 276

    # --- structures inside the 22-point residue -----------------------------
    hexad = min(data["hexads22"], key=sorted)
    hepta_a = min((o - {22} for o in octads if 22 in o and 23 not in o), key=sorted)
    hepta_b = min((o - {23} for o in octads if 23 in o and 22 not in o), key=sorted)
    octad22 = min((o for o in octads if 22 not in o and 23 not in o), key=sorted)
    decad = min((d - {22, 23} for d in dodecads if 22 in d and 23 in d), key=sorted)

    def stab22(gens, order, gamma, want_orbit, want_order):
        sg, so, n = calc.orbit_stab(gens, order, gamma)
        assert (n, so) == (want_orbit, want_order), (sorted(gamma), n, so)
        return sg

    hexstab22 = stab22(m22_24, m22_order, hexad, 77, 5760)
    a7a_24 = stab22(m22_24, m22_order, hepta_a, 176, 2520)
    a7b_24 = stab22(m22_24, m22_order, hepta_b, 176, 2520)
    pairstab22 = stab22(m22_24, m22_order, {0, 1}, 231, 1920)
    octstab22 = stab22(m22_24, m22_order, octad22, 330, 1344)
    decstab22 = stab22(m22_24, m22_order, decad, 616, 720)

    hexstab222 = stab22(m222_24, m222_order, hexad, 77, 11520)
    pairstab222 = stab22(m222_24, m222_order, {0, 1}, 231, 3840)
    octstab222 = stab22(m222_24, m222_order, octad22, 330, 2688)
    decstab222 = stab22(m222_24, m222_order, decad, 616, 1440)
    l342_24, l342_order = calc.point_stab(m222_24, 21, m222_order)
    assert l342_order == 40320
    verbose("M22 / M22.2 subgroup families verified")

    r22 = range(22)
    m22_tree = entry(
        "M22", restrict_all(m22_24, r22), m22_order, False,
        [
            entry("L3(4)", restrict_all(l34_24, r22), 20160, False),
            entry("2^4:A6", restrict_all(hexstab22, r22), 5760, False),
            entry("A7a", restrict_all(a7a_24, r22), 2520, False),
            entry("A7b", restrict_all(a7b_24, r22), 2520, False),
            entry("2^4:S5", restrict_all(pairstab22, r22), 1920, False),
            entry("2^3:L3(2)", restrict_all(octstab22, r22), 1344, False),
            entry("M10", restrict_all(decstab22, r22), 720, False),
        ],
    )
    m222_22 = restrict_all(m222_24, r22)
    m22_2_entry = entry(
        "M22_2", m222_22, m222_order, True,
        [
            m22_tree,
            entry("L3(4).2", restrict_all(l342_24, r22), 40320, False),
            entry("2^4:S6", restrict_all(hexstab222, r22), 11520, False),
            entry("2^5:S5", restrict_all(pairstab222, r22), 3840, False),
            entry("2^3:L3(2)x2", restrict_all(octstab222, r22), 2688, False),
            entry("A6.2^2", restrict_all(decstab222, r22), 1440, False),
        ],
    )
    assert check_2transitive(calc, m222_22, m222_order)

    m22_plain = entry("M22", restrict_all(m22_24, r22), m22_order, True)
    assert check_2transitive(calc, restrict_all(m22_24, r22), m22_order)
    m23_entry = entry("M23", restrict_all(m23_24, range(23)), m23_order, True)
    assert check_2transitive(calc, restrict_all(m23_24, range(23)), m23_order)

    # --- A7 on 15 points: heptad-stabilizer orbit ---------------------------
    rest15 = sorted(set(range(22)) - hepta_a)
    a7_15 = restrict_all(a7a_24, rest15)
    assert calc.order(a7_15) == 2520
    assert check_2transitive(calc, a7_15, 2520)
    a7_entry = entry("A7", a7_15, 2520, True)

    # --- M12 family from a dodecad ------------------------------------------
    dodecad = min(dodecads, key=sorted)
    co_dodecad = sorted(set(range(24)) - dodecad)
    m12_24, m12_order, dodecad_orbit = calc.orbit_stab(m24, m24_order, dodecad)
    assert m12_order == 95040 and dodecad_orbit == 2576

    m12 = restrict_all(m12_24, sorted(dodecad))
    assert calc.order(m12) == 95040
    assert check_2transitive(calc, m12, 95040)
    m12_entry = entry("M12", m12, 95040, True)

    u = min(dodecad)
    m11stab_24, m11_order = calc.point_stab(m12_24, u, m12_order)
    assert m11_order == 7920
    m11_12 = restrict_all(m11stab_24, co_dodecad)
    assert calc.order(m11_12) == 7920
    assert check_2transitive(calc, m11_12, 7920)

    m11_11 = restrict_all(m11stab_24, sorted(dodecad - {u}))
    assert calc.order(m11_11) == 7920
    assert check_2transitive(calc, m11_11, 7920)
    m11_11_entry = entry("M11", m11_11, 7920, True)

    u2 = sorted(dodecad)[1]
    m10stab_24, m10_order = calc.point_stab(m11stab_24, u2, m11_order)
    assert m10_order == 720
    m10_12 = restrict_all(m10stab_24, co_dodecad)
    m10_children = []
    if calc.orbit_sizes(m10_12) == [12]:
        pstab, pord = calc.point_stab(m10_12, 0, 720)
        m10_children.append(entry("M10_pt", pstab, pord, False))
    m10_entry = entry("M10", m10_12, 720, False, m10_children)

    m9_gens = _m11_sylow3_normalizer(m11_12)
    m9_entry = entry("3^2:Q8.2", m9_gens, 144, False)
    m11_12_entry = entry("M11", m11_12, 7920, True, [m10_entry, m9_entry])
    verbose("M12 / M11 family verified")

    # --- L2(11) on 11 points: (2,3,11)-generated inside M11 -----------------
    l2_11 = _find_l2_11(m11_11, calc)
    l2_11_entry = entry("L2_11", l2_11, 660, True)

    # --- M24 subgroup tree ---------------------------------------------------
    octad0 = min(octads, key=sorted)
    octstab24, oct_order, octorb = calc.orbit_stab(m24, m24_order, octad0)
    assert (octorb, oct_order) == (759, 322560)

    swap = set_orbit_transporter(m12_24, frozenset(dodecad), frozenset(co_dodecad))
    assert swap is None
    swap = set_orbit_transporter(m24, frozenset(dodecad), frozenset(co_dodecad))
    assert swap is not None and image_of_set(swap, dodecad) == frozenset(co_dodecad)
    m122_24 = list(m12_24) + [swap]
    assert calc.order(m122_24) == 190080

    tetrad = frozenset(sorted(octad0)[:4])
    sextet = golay.sextet_of(tetrad, data["five2octad"])
    sextet.sort(key=lambda part: min(part))
    tetstab, tet_order, tetorb = calc.orbit_stab(m24, m24_order, tetrad)
    assert (tetorb, tet_order) == (10626, 23040)
    mover = set_orbit_transporter(m24, tetrad, sextet[1])
    sexstab = list(tetstab) + [mover]
    assert calc.order(sexstab) == 138240

    half = frozenset().union(*sextet[:3])
    g27, g27_order, halforb = calc.orbit_stab(m24, m24_order, half)
    assert (halforb, g27_order) == (35420, 6912)
    flip = set_orbit_transporter(m24, half, frozenset(range(24)) - half)
    assert flip is not None
    x_gens = list(g27) + [flip]
    assert calc.order(x_gens) == 13824

    triad = frozenset({21, 22, 23})
    triadstab, triad_order, triadorb = calc.orbit_stab(m24, m24_order, triad)
    assert (triadorb, triad_order) == (2024, 120960)

    l2_23 = [s, t]
    assert calc.order(l2_23) == 6072

    m24_entry = entry(
        "M24", m24, m24_order, True,
        [
            entry("M23", m23_24, m23_order, False),
            entry("M22.2", m222_24, m222_order, False),
            entry("2^4:A8", octstab24, 322560, False),
            entry("M12.2", m122_24, 190080, False,
                  [entry("M12", m12_24, 95040, False)]),
            entry("2^6:3.S6", sexstab, 138240, False,
                  [entry("2^6:3.(S3wrS2)", x_gens, 13824, False,
                         [entry("2^6:3.(S3xS3)", g27, 6912, False)])]),
            entry("L3(4).S3", triadstab, 120960, False),
            entry("L2(23)", l2_23, 6072, False),
        ],
    )
    verbose("M24 tree verified")

    pgl_entry = _build_pgammal28(calc)
    verbose("PGammaL28 verified")

    return {
        "L2_11": l2_11_entry,
        "A7": a7_entry,
        "M11_11": m11_11_entry,
        "M11_12": m11_12_entry,
        "M12": m12_entry,
        "M22": m22_plain,
        "M22_2": m22_2_entry,
        "M23": m23_entry,
        "M24": m24_entry,
        "PGammaL28": pgl_entry,
        # raw material reused by the degree-276 build
        "_m24": m24,
        "_m24_order": m24_order,
        "_blocks23": data["blocks23"],
        "_m23_24": m23_24,
    }


def _m11_sylow3_normalizer(m11_12):
    """N(Sylow-3) in M11 acting on 12 points, order 144, by brute force."""
    elements = sorted(closure(m11_12, limit=8000))
    assert len(elements) == 7920
    third = [e for e in elements if perm_order(e) == 3]
    g = third[0]
    gset = {g, compose(g, g)}
    h = next(
        e for e in third
        if e not in gset and compose(e, g) == compose(g, e)
    )
    syl = closure([g, h], limit=10)
    assert len(syl) == 9
    norm = [
        e for e in elements
        if all(compose(compose(inverse(e), p), e) in syl for p in (g, h))
    ]
    assert len(norm) == 144
    for a in norm:
        for b in norm:
            if len(closure([a, b], limit=200)) == 144:
                return [a, b]
    raise RuntimeError("Sylow-3 normalizer is not 2-generated")


def _find_l2_11(m11_11, calc):
    """A (2,3,11)-generated L2(11) inside M11 on 11 points."""
    elements = sorted(closure(m11_11, limit=8000))
    assert len(elements) == 7920
    invs = [e for e in elements if perm_order(e) == 2]
    thirds = [e for e in elements if perm_order(e) == 3]
    for x in invs:
        for y in thirds:
            if perm_order(compose(x, y)) != 11:
                continue
            try:
                h = closure([x, y], limit=700)
            except RuntimeError:
                continue
            if len(h) == 660:
                gens = [x, y]
                if calc.orbit_sizes(gens) == [11]:
                    assert check_2transitive(calc, gens, 660)
                    return gens
    raise RuntimeError("no L2(11) found in M11")


def _build_pgammal28(calc):
    """PGammaL(2,8) acting on the 28 Sylow-3 subgroups of L2(8)."""
    # GF(8) as polynomials over GF(2) mod x^3 + x + 1, encoded 0..7
    def mul(a, b):
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & 8:
                a ^= 0b1011
        return r

    inv = {a: next(b for b in range(1, 8) if mul(a, b) == 1) for a in range(1, 8)}

    INF = 8  # projective point at infinity; field elements are 0..7

    def proj(f):
        """Lift a map on GF(8) u {INF} given as a callable to a 9-perm."""
        img = tuple(f(x) for x in list(range(8)) + [INF])
        assert len(set(img)) == 9
        return img

    add1 = proj(lambda x: INF if x == INF else x ^ 1)
    mula = proj(lambda x: INF if x == INF else mul(2, x))
    invmap = proj(lambda x: 0 if x == INF else (INF if x == 0 else inv[x]))
    frob = proj(lambda x: INF if x == INF else mul(x, x))

    l28 = closure([add1, mula, invmap], limit=600)
    assert len(l28) == 504
    nines = [e for e in l28 if perm_order(e) == 9]
    sylows = sorted(
        {frozenset(closure([e], limit=10)) for e in nines},
        key=lambda sub: sorted(sub),
    )
    assert len(sylows) == 28
    index = {sub: i for i, sub in enumerate(sylows)}

    def conj_action(p):
        pi = inverse(p)
        img = []
        for sub in sylows:
            conj = frozenset(compose(compose(pi, e), p) for e in sub)
            img.append(index[conj])
        assert len(set(img)) == 28
        return tuple(img)

    a28, b28, c28, f28 = (conj_action(p) for p in (add1, mula, invmap, frob))
    pgl = [a28, b28, c28, f28]
    assert calc.order(pgl) == 1512
    assert check_2transitive(calc, pgl, 1512)

    l28_gens = [a28, b28, c28]
    assert calc.order(l28_gens) == 504

    agl = [a28, b28, f28]
    assert calc.order(agl) == 168

    pgl_elements = sorted(closure(pgl, limit=1600))
    assert len(pgl_elements) == 1512
    stab0 = [e for e in pgl_elements if e[0] == 0]
    assert len(stab0) == 54
    stab_gens = None
    for a in stab0:
        for b in stab0:
            if len(closure([a, b], limit=60)) == 54:
                stab_gens = [a, b]
                break
        if stab_gens:
            break
    assert stab_gens is not None

    return entry(
        "PGammaL28", pgl, 1512, True,
        [
            entry("L2(8)", l28_gens, 504, False),
            entry("2^3:7:3", agl, 168, False),
            entry("9:6", stab_gens, 54, False),
        ],
    )
