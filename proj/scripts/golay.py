"""Binary Golay code combinatorics on 24 points.

Everything downstream (the Mathieu groups, the Steiner systems, the
McLaughlin graph) is derived from the extended [24,12,8] code, which in
turn comes from the quadratic-residue [23,12,7] code: we factor x^23 - 1
over GF(2) and span one degree-11 factor.
"""

from itertools import combinations


def _gf2_factor_deg11():
    """A degree-11 irreducible factor of x^23 - 1 over GF(2), as a bitmask
    (bit i = coefficient of x^i).  Uses sympy for the factorization."""
    from sympy import GF, Poly, symbols

    x = symbols("x")
    poly = Poly(x**23 - 1, x, domain=GF(2))
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() == 11:
            coeffs = factor.all_coeffs()  # highest degree first
            mask = 0
            for i, c in enumerate(reversed(coeffs)):
                if int(c) % 2:
                    mask |= 1 << i
            return mask
    raise RuntimeError("no degree-11 factor of x^23-1 found")


def build():
    """Returns a dict with the extended-code combinatorics:

    octads      : 759 frozensets of size 8 on {0..23}
    dodecads    : 2576 frozensets of size 12
    blocks23    : 253 frozensets of size 7 on {0..22}   (S(4,7,23))
    hexads22    : 77 frozensets of size 6 on {0..21}    (S(3,6,22))
    five2octad  : dict mapping each 5-subset (frozenset) to its octad
    """
    g = _gf2_factor_deg11()
    # x^i * g for i <= 11 stays below degree 23, so plain shifts span the code
    basis = [g << i for i in range(12)]
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    assert len(words) == 4096

    def parity(w):
        return bin(w).count("1") & 1

    extended = [w | (parity(w) << 23) for w in words]
    weights = {}
    for w in extended:
        weights[bin(w).count("1")] = weights.get(bin(w).count("1"), 0) + 1
    assert weights == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, weights

    def to_set(w):
        return frozenset(i for i in range(24) if (w >> i) & 1)

    octads = sorted((to_set(w) for w in extended if bin(w).count("1") == 8),
                    key=sorted)
    dodecads = sorted((to_set(w) for w in extended if bin(w).count("1") == 12),
                      key=sorted)

    blocks23 = sorted((o - {23} for o in octads if 23 in o), key=sorted)
    assert len(blocks23) == 253 and all(len(b) == 7 for b in blocks23)
    hexads22 = sorted((o - {22, 23} for o in octads if 22 in o and 23 in o),
                      key=sorted)
    assert len(hexads22) == 77 and all(len(h) == 6 for h in hexads22)

    five2octad = {}
    for o in octads:
        for five in combinations(sorted(o), 5):
            key = frozenset(five)
            assert key not in five2octad
            five2octad[key] = o
    assert len(five2octad) == 759 * 56

    return {
        "octads": octads,
        "dodecads": dodecads,
        "blocks23": blocks23,
        "hexads22": hexads22,
        "five2octad": five2octad,
    }


def sextet_of(tetrad, five2octad):
    """The unique sextet refining a tetrad: six tetrads, pairwise unions
    octads, partitioning the 24 points."""
    t = frozenset(tetrad)
    assert len(t) == 4
    tetrads = [t]
    covered = set(t)
    for x in range(24):
        if x in covered:
            continue
        octad = five2octad[t | {x}]
        part = octad - t
        assert len(part) == 4 and x in part
        tetrads.append(part)
        covered |= part
    assert len(tetrads) == 6 and len(covered) == 24
    return tetrads
