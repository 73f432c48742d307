"""Exact factorization of univariate integer polynomials over the rationals.

`factor` runs the classical modular pipeline: Yun squarefree decomposition,
Cantor-Zassenhaus factorization modulo a well-chosen small prime, quadratic
multifactor Hensel lifting past a Mignotte-style coefficient bound, and
subset recombination.  `kronecker_factor_oracle` is an independent
interpolation-based method kept for cross-checking in tests.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .polyarith import IntPoly, div_exact, poly_gcd


class DegreeTooLargeError(ValueError):
    """Input degree exceeds what the exponential oracle method accepts."""


@dataclass(frozen=True)
class Factorization:
    """content * prod(factor**multiplicity) == the factored polynomial.

    Factors are primitive with positive leading coefficient, irreducible over
    the rationals, and sorted by (degree, coefficient sequence).
    """

    content: int
    factors: tuple[tuple[IntPoly, int], ...]

    def expand(self) -> IntPoly:
        acc = IntPoly((self.content,))
        for f, mult in self.factors:
            acc = acc * f ** mult
        return acc

    @property
    def factor_count(self) -> int:
        return sum(mult for _, mult in self.factors)


def _signed_content(p: IntPoly) -> tuple[int, IntPoly]:
    """(c, q) with p == c*q, q primitive with positive leading coefficient."""
    c = p.content()
    q = p.primitive_part()
    if q.lc < 0:
        c = -c
        q = -q
    return c, q


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition: pairwise coprime squarefree parts by multiplicity.

    The product of part**multiplicity reconstructs p divided by its signed
    content; parts carry positive leading coefficients.
    """
    if p.is_zero:
        raise ValueError("nonzero polynomial required")
    _, f = _signed_content(p)
    if f.degree < 1:
        return []
    g = poly_gcd(f, f.derivative())
    if g.degree < 1:
        return [(f, 1)]
    parts: list[tuple[IntPoly, int]] = []
    c = div_exact(f, g)
    d = div_exact(f.derivative(), g) - c.derivative()
    i = 1
    while c.degree >= 1:
        a = poly_gcd(c, d)
        if a.degree >= 1:
            parts.append((a, i))
        c = div_exact(c, a)
        d = div_exact(d, a) - c.derivative()
        i += 1
    return parts


# -- GF(p) polynomial arithmetic (dense ascending lists, trimmed) ---------------


def _gp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gp_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _gp_trim(out)


def _gp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _gp_trim(out)


def _gp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _gp_trim([c % p for c in out])


def _gp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    r = [c % p for c in a]
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _gp_trim(r)
    binv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        if r[i] % p:
            c = r[i] * binv % p
            q[i - db] = c
            for j, bc in enumerate(b):
                r[i - db + j] = (r[i - db + j] - c * bc) % p
    return _gp_trim(q), _gp_trim(r[:db])


def _gp_monic(a, p):
    if not a or a[-1] == 1:
        return a[:]
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gp_gcd(a, b, p):
    a, b = a[:], b[:]
    while b:
        a, b = b, _gp_divmod(a, b, p)[1]
    return _gp_monic(a, p)


def _gp_extgcd(a, b, p):
    """(g, s, t) with s*a + t*b == g (monic) in GF(p)[x]."""
    r0, r1 = a[:], b[:]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gp_sub(s0, _gp_mul(q, s1, p), p)
        t0, t1 = t1, _gp_sub(t0, _gp_mul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], -1, p)
        r0 = [c * inv % p for c in r0]
        s0 = [c * inv % p for c in s0]
        t0 = [c * inv % p for c in t0]
    return r0, s0, t0


def _gp_powmod(base, e, mod, p):
    result = [1]
    base = _gp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gp_divmod(_gp_mul(result, base, p), mod, p)[1]
        base = _gp_divmod(_gp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _gp_deriv(a, p):
    return _gp_trim([i * c % p for i, c in enumerate(a)][1:])


def _gp_ddf(f, p):
    """Distinct-degree split of a monic squarefree f over GF(p)."""
    out = []
    v = f[:]
    h = [0, 1]
    i = 1
    while len(v) - 1 >= 2 * i:
        h = _gp_powmod(h, p, v, p)
        g = _gp_gcd(_gp_sub(h, [0, 1], p), v, p)
        if len(g) > 1:
            out.append((g, i))
            v = _gp_divmod(v, g, p)[0]
            h = _gp_divmod(h, v, p)[1]
        i += 1
    if len(v) > 1:
        out.append((v, len(v) - 1))
    return out


def _gp_edf(g, d, p, rng):
    """Equal-degree split of monic g into its degree-d irreducible factors."""
    if len(g) - 1 == d:
        return [g]
    e = (p ** d - 1) // 2
    while True:
        a = _gp_trim([rng.randrange(p) for _ in range(len(g) - 1)])
        if len(a) < 2:
            continue
        t = _gp_sub(_gp_powmod(a, e, g, p), [1], p)
        u = _gp_gcd(t, g, p)
        if 1 <= len(u) - 1 < len(g) - 1:
            q = _gp_divmod(g, u, p)[0]
            return _gp_edf(u, d, p, rng) + _gp_edf(q, d, p, rng)


def _gp_factor_monic_squarefree(f, p, rng):
    out = []
    for g, d in _gp_ddf(f, p):
        out.extend(_gp_edf(g, d, p, rng))
    out.sort(key=lambda a: (len(a), a))
    return out


# -- Z/m arithmetic for Hensel lifting -------------------------------------------


def _zm_add(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _gp_trim(out)


def _zm_sub(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _gp_trim(out)


def _zm_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _gp_trim([c % m for c in out])


def _zm_divmod_monic(a, b, m):
    if not b or b[-1] != 1:
        raise ValueError("monic divisor required")
    r = [c % m for c in a]
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _gp_trim(r)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            q[i - db] = c
            for j, bc in enumerate(b):
                r[i - db + j] = (r[i - db + j] - c * bc) % m
    return _gp_trim(q), _gp_trim(r[:db])


def _hensel_step(f, g, h, s, t, m):
    """Lift f = g*h (mod m) with s*g + t*h = 1 (mod m) to modulus m*m.

    h must be monic; returns (g, h, s, t) mod m*m with the same invariants.
    """
    mm = m * m
    fm = [c % mm for c in f]
    e = _zm_sub(fm, _zm_mul(g, h, mm), mm)
    q, r = _zm_divmod_monic(_zm_mul(s, e, mm), h, mm)
    g1 = _zm_add(g, _zm_add(_zm_mul(t, e, mm), _zm_mul(q, g, mm), mm), mm)
    h1 = _zm_add(h, r, mm)
    b = _zm_sub(_zm_add(_zm_mul(s, g1, mm), _zm_mul(t, h1, mm), mm), [1], mm)
    c, d = _zm_divmod_monic(_zm_mul(s, b, mm), h1, mm)
    s1 = _zm_sub(s, d, mm)
    t1 = _zm_sub(t, _zm_add(_zm_mul(t, b, mm), _zm_mul(c, g1, mm), mm), mm)
    return g1, h1, s1, t1


def _hensel_multilift(f_mod, facs, p, steps):
    """Lift the monic GF(p) factors of a monic f to modulus p**(2**steps).

    f_mod is f reduced mod p**(2**steps); the recursion lifts the two halves
    of the factor list and descends.
    """
    if len(facs) == 1:
        return [f_mod[:]]
    half = len(facs) // 2
    left, right = facs[:half], facs[half:]
    g = [1]
    for a in left:
        g = _gp_mul(g, a, p)
    h = [1]
    for a in right:
        h = _gp_mul(h, a, p)
    one, s, t = _gp_extgcd(g, h, p)
    if one != [1]:
        raise AssertionError("modular factors not coprime")
    m = p
    for _ in range(steps):
        g, h, s, t = _hensel_step(f_mod, g, h, s, t, m)
        m = m * m
    return (_hensel_multilift(g, left, p, steps)
            + _hensel_multilift(h, right, p, steps))


# -- the Zassenhaus driver --------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % q == 0:
            return n == q
    d = 37
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _choose_prime(f: IntPoly) -> int:
    """Smallest p >= 5 keeping f squarefree and degree-preserving mod p."""
    p = 5
    while True:
        if _is_prime(p) and f.lc % p != 0:
            fbar = [c % p for c in f.coeffs]
            if _gp_gcd(fbar, _gp_deriv(fbar, p), p) == [1]:
                return p
        p += 2 if p > 2 else 1


def _coeff_seed(f: IntPoly) -> int:
    seed = 0x5A1E
    for c in f.coeffs:
        seed = (seed * 1000003 + c) % (1 << 63)
    return seed


def _mignotte_exponent_steps(f: IntPoly, p: int) -> int:
    """Doubling steps so p**(2**steps) exceeds twice the factor coeff bound."""
    n = f.degree
    height = max(abs(c) for c in f.coeffs)
    bound = (math.isqrt(n + 1) + 1) * (1 << n) * height * abs(f.lc)
    target = 2 * bound + 1
    steps = 0
    m = p
    while m < target:
        m = m * m
        steps += 1
    return steps


def _factor_monic_squarefree(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a monic squarefree integer polynomial."""
    if f.degree == 1:
        return [f]
    p = _choose_prime(f)
    rng = random.Random(_coeff_seed(f))
    fbar = [c % p for c in f.coeffs]
    modular = _gp_factor_monic_squarefree(fbar, p, rng)
    if len(modular) == 1:
        return [f]
    steps = _mignotte_exponent_steps(f, p)
    modulus = p ** (1 << steps)
    f_mod = [c % modulus for c in f.coeffs]
    lifted = _hensel_multilift(f_mod, modular, p, steps)

    def symmetric(poly_mod: list[int]) -> IntPoly:
        half = modulus // 2
        return IntPoly(tuple(c if c <= half else c - modulus for c in poly_mod))

    remaining = list(range(len(lifted)))
    found: list[IntPoly] = []
    g = f
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for combo in itertools.combinations(remaining, size):
            prod = [1]
            for i in combo:
                prod = _zm_mul(prod, lifted[i], modulus)
            cand = symmetric(prod)
            if g[0] != 0 and cand[0] != 0 and g[0] % cand[0] != 0:
                continue
            quo, rem = divmod(g, cand)
            if rem.is_zero:
                found.append(cand)
                g = quo
                remaining = [i for i in remaining if i not in combo]
                hit = True
                break
        if not hit:
            size += 1
    if g.degree >= 1:
        found.append(g)
    return found


def _monicize(f: IntPoly) -> tuple[IntPoly, int]:
    """(F, lam) with F(x) = lam**(deg-1) * f(x/lam) monic over the integers."""
    lam = f.lc
    n = f.degree
    coeffs = tuple(c * lam ** (n - 1 - i)
                   for i, c in enumerate(f.coeffs[:-1])) + (1,)
    return IntPoly(coeffs), lam


def _demonicize(g: IntPoly, lam: int) -> IntPoly:
    coeffs = tuple(c * lam ** i for i, c in enumerate(g.coeffs))
    return IntPoly(coeffs).primitive_part()


def _factor_squarefree(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree f with positive lc."""
    if f.degree == 1:
        return [f]
    if f.is_monic:
        return sorted(_factor_monic_squarefree(f), key=IntPoly.sort_key)
    big, lam = _monicize(f)
    parts = [_demonicize(g, lam) for g in _factor_monic_squarefree(big)]
    for i, part in enumerate(parts):
        if part.lc < 0:
            parts[i] = -part
    return sorted(parts, key=IntPoly.sort_key)


def factor(p: IntPoly) -> Factorization:
    """Complete factorization into content and rational irreducibles."""
    if p.is_zero:
        raise ValueError("nonzero polynomial required")
    content, f = _signed_content(p)
    counts: dict[IntPoly, int] = {}
    # x**k factors come off first so every later value test sees f(0) != 0
    k = 0
    while f.degree >= 1 and f[0] == 0:
        k += 1
        f = IntPoly(f.coeffs[1:])
    if k:
        counts[IntPoly.x()] = k
    for part, mult in squarefree_decomposition(f):
        for irr in _factor_squarefree(part):
            counts[irr] = counts.get(irr, 0) + mult
    factors = tuple(sorted(counts.items(), key=lambda kv: kv[0].sort_key()))
    return Factorization(content, factors)


def is_irreducible(p: IntPoly) -> bool:
    """True iff p is irreducible over the rationals (up to unit content)."""
    if p.is_zero or p.degree < 1:
        raise ValueError("polynomial of degree >= 1 required")
    fz = factor(p)
    return (abs(fz.content) == 1 and len(fz.factors) == 1
            and fz.factors[0][1] == 1)


# -- Kronecker interpolation oracle (tests only) ----------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _interpolate(points: list[tuple[int, int]]):
    """Lagrange interpolation; returns ascending Fraction coefficients."""
    k = len(points)
    coeffs = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(points):
        # basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                new[t] -= c * xj
                new[t + 1] += c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for t, c in enumerate(basis):
            coeffs[t] += c * scale
    return coeffs


def _strip_rational_roots(f: IntPoly, counts: dict[IntPoly, int]) -> IntPoly:
    changed = True
    while changed and f.degree >= 1:
        changed = False
        c0 = f[0]
        if c0 == 0:
            counts[IntPoly.x()] = counts.get(IntPoly.x(), 0) + 1
            f = IntPoly(f.coeffs[1:])
            changed = True
            continue
        for num in _divisors(c0):
            for den in _divisors(f.lc):
                if math.gcd(num, den) != 1:
                    continue
                for s in (1, -1):
                    if f.eval_fraction(Fraction(s * num, den)) == 0:
                        lin = IntPoly((-s * num, den))
                        f = div_exact(f, lin)
                        counts[lin] = counts.get(lin, 0) + 1
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return f


def _kronecker_split(f: IntPoly):
    """A nontrivial primitive factor of f, or None if f is irreducible.

    f must be primitive with positive lc, degree >= 2, and no rational roots.
    """
    candidates = []
    seq = itertools.chain([0], (s * v for v in range(1, 30) for s in (1, -1)))
    for x in seq:
        val = f.eval_int(x)
        if val == 0:
            raise AssertionError("rational roots must be stripped first")
        candidates.append((len(_divisors(val)), abs(x), x, val))
        if len(candidates) >= f.degree + 3:
            break
    candidates.sort()
    for k in range(2, f.degree // 2 + 1):
        pts = candidates[:k + 1]
        xs = [c[2] for c in pts]
        vals = [c[3] for c in pts]
        divs = []
        for i, v in enumerate(vals):
            base = _divisors(v)
            if i == 0:
                divs.append(base)  # sign symmetry: fix d0 > 0
            else:
                divs.append([s * d for d in base for s in (1, -1)])

        def search(level: int, chosen: list[int]):
            if level == len(xs):
                coeffs = _interpolate(list(zip(xs, chosen)))
                if any(c.denominator != 1 for c in coeffs):
                    return None
                g = IntPoly(tuple(int(c) for c in coeffs))
                if g.degree != k:
                    return None
                if g.lc < 0:
                    g = -g
                try:
                    div_exact(f, g)
                except ValueError:
                    return None
                return g
            for d in divs[level]:
                ok = True
                for j in range(level):
                    if (d - chosen[j]) % (xs[level] - xs[j]) != 0:
                        ok = False
                        break
                if ok:
                    got = search(level + 1, chosen + [d])
                    if got is not None:
                        return got
            return None

        got = search(0, [])
        if got is not None:
            return got
    return None


def kronecker_factor_oracle(p: IntPoly) -> Factorization:
    """Same contract as factor(), by exponential interpolation search."""
    if p.is_zero:
        raise ValueError("nonzero polynomial required")
    if p.degree > 8:
        raise DegreeTooLargeError("oracle limited to degree <= 8")
    content, f = _signed_content(p)
    counts: dict[IntPoly, int] = {}
    stack = [f]
    while stack:
        g = stack.pop()
        g = _strip_rational_roots(g, counts)
        if g.degree < 1:
            continue
        if g.degree == 1:
            counts[g] = counts.get(g, 0) + 1
            continue
        piece = _kronecker_split(g)
        if piece is None:
            counts[g] = counts.get(g, 0) + 1
        else:
            stack.append(piece)
            stack.append(div_exact(g, piece))
    factors = tuple(sorted(counts.items(), key=lambda kv: kv[0].sort_key()))
    return Factorization(content, factors)
