"""A reproducible model of Q(zeta_k) inside Qbar_p, with exact valuations.

For k = p^a * k' (p odd, gcd(k', p) = 1) the completion at the chosen place
is the compositum of

* an unramified part W = Z_p[x]/(g(x)), g a fixed irreducible factor of
  Phi_{k'} mod p Hensel-lifted to the working precision p^N, and
* a totally ramified part generated by pi = zeta_{p^a} - 1, a root of the
  Eisenstein polynomial E(pi) = Phi_{p^a}(1 + pi).

Elements are matrices c[j][i] of integers mod p^N (coefficient of pi^j x^i),
optionally divided by an explicit power p^shift.  Valuations are exact
Fractions normalized by v(p) = 1, so v(pi) = 1/phi(p^a); they are computed
as min_j (v(c_j) + j/e), which has no cancellation because the candidate
values are pairwise distinct mod 1.

Which factor of Phi_{k'} mod p gets used pins down the place (equivalently,
the embedding of the prime-to-p roots of unity).  The rule: write each monic
irreducible factor as x^d - (b_{d-1} x^{d-1} + ... + b_0) with 0 <= b_i < p
and take the factor with the lexicographically least (b_0, ..., b_{d-1}).
For split k' this picks the smallest root; e.g. for p = 5, k' = 4 the roots
of x^2 + 1 are {2, 3} and the rule sends zeta_4 to 2.  Any fixed rule would
do, but verdicts for individual characters depend on this one.

The image of zeta_k is normalised by CRT: zeta_k^(k') = 1 + pi and
zeta_k^(p^a) = x.  This makes the place restrict to the place of the tame
subfield, so residues are comparable across towers sharing the same k'.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from lzero._kernels import poly_mul_reduce, tower_mul
from lzero.characters import DirichletChar, eval_exponent, unit_group_basis, _char_data
from lzero.cyclo import CycloElt, IntPoly, cyclotomic_poly
from lzero.errors import IncompatibleOrders, PrecisionExhausted
from lzero.nt import euler_phi, factorize, is_prime, multiplicative_order, valuation

N_START = 16
N_CAP = 512
_FACTOR_SEED = 0x1CEB00DA  # deterministic equal-degree splitting


class _AbovePrecision:
    """Valuation outcome for an element that vanishes mod p^N: all we know
    is v >= N - shift, so the question is undecidable at this precision."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AbovePrecision"


ABOVE_PRECISION = _AbovePrecision()


# ---------------------------------------------------------------------------
# dense polynomials over Z/p (lists, ascending degree, no trailing zeros)


def _pm_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pm_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pm_trim(out)


def _pm_divmod(a, b, p):
    """Quotient and remainder mod p; b monic-ish (leading coeff invertible)."""
    rem = [x % p for x in a]
    _pm_trim(rem)
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, p)
    quo = [0] * max(len(rem) - len(b) + 1, 0)
    while len(rem) >= len(b):
        q = rem[-1] * inv % p
        shift = len(rem) - len(b)
        quo[shift] = q
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - q * c) % p
        _pm_trim(rem)
    return quo, rem


def _pm_gcd(a, b, p):
    a, b = [x % p for x in a], [x % p for x in b]
    _pm_trim(a)
    _pm_trim(b)
    while b:
        a, b = b, _pm_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _pm_xgcd(a, b, p):
    """(g, s, t) with s a + t b = g mod p, g monic."""
    r0, s0, t0 = list(a), [1], []
    r1, s1, t1 = list(b), [], [1]
    _pm_trim(r0)
    _pm_trim(r1)
    while r1:
        q, r = _pm_divmod(r0, r1, p)
        qs = _pm_mul(q, s1, p)
        qt = _pm_mul(q, t1, p)
        ns = [(x - y) % p for x, y in _zip_pad(s0, qs)]
        nt = [(x - y) % p for x, y in _zip_pad(t0, qt)]
        r0, s0, t0 = r1, s1, t1
        r1, s1, t1 = _pm_trim(r), _pm_trim(ns), _pm_trim(nt)
    inv = pow(r0[-1], -1, p)
    return (
        [x * inv % p for x in r0],
        [x * inv % p for x in s0],
        [x * inv % p for x in t0],
    )


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _pm_powmod(base, exp, mod, p):
    result = [1]
    base = _pm_divmod(base, mod, p)[1]
    while exp:
        if exp & 1:
            result = _pm_divmod(_pm_mul(result, base, p), mod, p)[1]
        base = _pm_divmod(_pm_mul(base, base, p), mod, p)[1]
        exp >>= 1
    return result


def _equal_degree_split(h: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Factor a squarefree product of degree-d irreducibles mod p (p odd)."""
    deg = len(h) - 1
    if deg == d:
        return [h]
    half = (p**d - 1) // 2
    while True:
        r = [rng.randrange(p) for _ in range(deg)]
        _pm_trim(r)
        if len(r) < 2:
            continue
        s = _pm_powmod(r, half, h, p)
        s = s[:]
        if s:
            s[0] = (s[0] - 1) % p
        else:
            s = [p - 1]
        g = _pm_gcd(h, s, p)
        if 0 < len(g) - 1 < deg:
            other = _pm_divmod(h, g, p)[0]
            return _equal_degree_split(g, d, p, rng) + _equal_degree_split(other, d, p, rng)


@functools.lru_cache(maxsize=None)
def residue_factor(p: int, k1: int) -> tuple[int, ...]:
    """The chosen monic irreducible factor of Phi_{k1} mod p (gcd(k1,p)=1).

    Selection: minimize (b_0, ..., b_{d-1}) where the factor is written as
    x^d - sum b_i x^i with least nonnegative b_i.
    """
    phi = [c % p for c in cyclotomic_poly(k1).coeffs]
    d = multiplicative_order(p, k1) if k1 > 1 else 1
    rng = random.Random(_FACTOR_SEED ^ (p << 20) ^ k1)
    factors = _equal_degree_split(phi, d, p, rng)

    def rule(g: list[int]) -> tuple[int, ...]:
        return tuple((-c) % p for c in g[:-1])

    return tuple(min(factors, key=rule))


def _hensel_lift(F: IntPoly, g_bar: tuple[int, ...], p: int, N: int) -> list[int]:
    """Lift the factor g_bar of F mod p to a monic divisor of F mod p^N."""
    g = [c % p for c in g_bar]
    if len(g) - 1 == F.degree:
        return [c % p**N for c in F.coeffs]
    h = _pm_divmod([c % p for c in F.coeffs], g, p)[0]
    s, t = _pm_xgcd(g, h, p)[1:]
    G = list(g)
    H = list(h)
    Fc = list(F.coeffs)
    mod = p
    for _ in range(N - 1):
        nxt = mod * p
        # E = (F - G H) / mod, reduced mod p
        GH = [0] * (len(G) + len(H) - 1)
        for i, x in enumerate(G):
            if x:
                for j, y in enumerate(H):
                    GH[i + j] += x * y
        E = []
        for i in range(len(Fc)):
            diff = (Fc[i] - (GH[i] if i < len(GH) else 0)) % nxt
            assert diff % mod == 0
            E.append(diff // mod % p)
        _pm_trim(E)
        # solve G*dh + H*dg = E mod p with deg dh < deg h, deg dg < deg g
        h_bar = [c % p for c in H]
        g_bar_cur = [c % p for c in G]
        dh = _pm_divmod(_pm_mul(s, E, p), h_bar, p)[1]
        num = [(x - y) % p for x, y in _zip_pad(E, _pm_mul(g_bar_cur, dh, p))]
        dg, rem = _pm_divmod(_pm_trim(num), h_bar, p)
        assert not rem, "Hensel correction must divide exactly"
        for i, c in enumerate(dh):
            if c:
                H[i] = (H[i] + mod * c) % nxt
        for i, c in enumerate(dg):
            if c:
                G[i] = (G[i] + mod * c) % nxt
        G = [c % nxt for c in G]
        H = [c % nxt for c in H]
        mod = nxt
    pN = p**N
    return [c % pN for c in G]


def _eisenstein_poly(p: int, a: int) -> IntPoly:
    """Phi_{p^a}(1 + x) for a >= 1; Eisenstein at p of degree phi(p^a)."""
    phi = cyclotomic_poly(p**a)
    acc = IntPoly(())
    shift = IntPoly.of(1, 1)
    for c in reversed(phi.coeffs):
        acc = acc * shift + IntPoly.of(c)
    return acc


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PadicTower:
    """The fixed local model for (p, k) at working precision p^N."""

    p: int
    k: int
    precision: int
    k_tame: int            # prime-to-p part k'
    wild_exp: int          # a with k = p^a k'
    f_res: int             # residue degree = deg of the chosen factor
    e_ram: int             # ramification index = phi(p^a)
    lifted_factor: tuple[int, ...]       # monic divisor of Phi_{k'} mod p^N
    _grows: tuple = field(repr=False, compare=False, default=())
    _erows: tuple = field(repr=False, compare=False, default=())
    _zeta_mat: tuple = field(repr=False, compare=False, default=())

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    def descriptor(self) -> dict:
        """Everything needed to re-derive the embedding independently."""
        return {
            "p": self.p,
            "k": self.k,
            "precision": self.precision,
            "k_tame": self.k_tame,
            "wild_exp": self.wild_exp,
            "f_res": self.f_res,
            "e_ram": self.e_ram,
            "factor": list(self.lifted_factor),
        }

    def zero(self) -> PadicElt:
        mat = tuple(tuple(0 for _ in range(self.f_res)) for _ in range(self.e_ram))
        return PadicElt(self, 0, mat)

    def one(self) -> PadicElt:
        return self.from_int(1)

    def from_int(self, n: int) -> PadicElt:
        mat = [[0] * self.f_res for _ in range(self.e_ram)]
        mat[0][0] = n % self.modulus
        return PadicElt(self, 0, tuple(tuple(r) for r in mat))

    def zeta_image(self) -> PadicElt:
        """The image of zeta_k: the k-th root of unity with zeta_k^(k') = 1+pi
        and zeta_k^(p^a) = x (CRT exponents on the two components)."""
        return PadicElt(self, 0, self._zeta_mat)


def _reduction_rows(monic: list[int], count: int, modulus: int) -> tuple:
    """Rows expanding x^(d+m), m < count, in the quotient by a monic poly."""
    d = len(monic) - 1
    low = [c % modulus for c in monic[:d]]
    rows = []
    cur = [(-c) % modulus for c in low]
    for _ in range(count):
        rows.append(tuple(cur))
        carry = cur[d - 1]
        cur = [0] + cur[: d - 1]
        if carry:
            for i in range(d):
                cur[i] = (cur[i] - carry * low[i]) % modulus
    return tuple(rows)


@functools.lru_cache(maxsize=None)
def build_tower(p: int, k: int, precision: int = N_START) -> PadicTower:
    """Construct (and cache) the local model for (p, k) at precision p^N."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if k < 1 or precision < 1:
        raise ValueError("k and precision must be positive")
    a = factorize(k).get(p, 0)
    k1 = k // p**a
    fct = residue_factor(p, k1)
    g_N = _hensel_lift(cyclotomic_poly(k1), fct, p, precision)
    f_res = len(g_N) - 1
    e_ram = euler_phi(p**a)
    pN = p**precision
    grows = _reduction_rows(g_N, max(f_res - 1, 0), pN) if f_res > 1 else ()
    if a >= 1:
        eis = _eisenstein_poly(p, a)
        erows = _reduction_rows([c % pN for c in eis.coeffs], max(e_ram - 1, 0), pN)
    else:
        erows = ()
    tower = PadicTower(
        p, k, precision, k1, a, f_res, e_ram, tuple(g_N), grows, erows, ()
    )
    # image of zeta_{k'}: x reduced mod g_N
    xpoly = [0] * f_res
    if f_res == 1:
        xpoly[0] = (-g_N[0]) % pN  # the lifted root
    else:
        xpoly[1] = 1
    zk1 = [[0] * f_res for _ in range(e_ram)]
    zk1[0] = xpoly
    zk1 = tuple(tuple(r) for r in zk1)
    if a >= 1:
        # zeta_{p^a} = 1 + pi; e_ram = phi(p^a) >= 2 here since p is odd
        one_pi = [[0] * f_res for _ in range(e_ram)]
        one_pi[0][0] = 1
        one_pi[1][0] = 1
        zpa = tuple(tuple(r) for r in one_pi)
        # zeta_k = zeta_{p^a}^alpha * zeta_{k'}^beta with the CRT exponents,
        # so that zeta_k^(p^a) comes out as exactly x: the place then
        # restricts to the place of the tame subfield chosen by the factor
        # rule, making residues comparable across towers sharing k'.
        alpha = pow(k1, -1, p**a)
        beta = pow(p**a, -1, k1) if k1 > 1 else 1
        zel = PadicElt(tower, 0, zpa) ** alpha * PadicElt(tower, 0, zk1) ** beta
        zmat = zel.mat
    else:
        zmat = zk1
    object.__setattr__(tower, "_zeta_mat", zmat)
    return tower


@dataclass(frozen=True)
class PadicElt:
    """An element C / p^shift with C an e x f coefficient matrix mod p^N."""

    tower: PadicTower
    shift: int
    mat: tuple[tuple[int, ...], ...]

    def _check(self, other: PadicElt):
        if self.tower is not other.tower and self.tower != other.tower:
            raise ValueError("elements live in different towers")

    def __add__(self, other: PadicElt):
        self._check(other)
        s = max(self.shift, other.shift)
        pN = self.tower.modulus
        p = self.tower.p
        ma = p ** (s - self.shift)
        mb = p ** (s - other.shift)
        mat = tuple(
            tuple((x * ma + y * mb) % pN for x, y in zip(ra, rb))
            for ra, rb in zip(self.mat, other.mat)
        )
        return PadicElt(self.tower, s, mat)

    def __neg__(self):
        pN = self.tower.modulus
        return PadicElt(
            self.tower, self.shift, tuple(tuple((-x) % pN for x in r) for r in self.mat)
        )

    def __sub__(self, other: PadicElt):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            pN = self.tower.modulus
            return PadicElt(
                self.tower,
                self.shift,
                tuple(tuple(x * other % pN for x in r) for r in self.mat),
            )
        self._check(other)
        t = self.tower
        mat = tower_mul(self.mat, other.mat, t._grows, t._erows, t.modulus)
        return PadicElt(t, self.shift + other.shift, tuple(tuple(r) for r in mat))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported in the tower")
        acc = self.tower.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, PadicElt):
            return NotImplemented
        self._check(other)
        s = max(self.shift, other.shift)
        p = self.tower.p
        pN = self.tower.modulus
        ma = p ** (s - self.shift)
        mb = p ** (s - other.shift)
        return all(
            (x * ma - y * mb) % pN == 0
            for ra, rb in zip(self.mat, other.mat)
            for x, y in zip(ra, rb)
        )

    __hash__ = None


def embed_padic(z: CycloElt, tower: PadicTower) -> PadicElt:
    """The image of z under the fixed embedding; z.order must divide k."""
    k = tower.k
    if k % z.order:
        raise IncompatibleOrders(f"order {z.order} does not divide tower order {k}")
    p, pN, N = tower.p, tower.modulus, tower.precision
    den = 1
    for c in z.coords:
        den = lcm(den, c.denominator)
    s = valuation(den, p) if den % p == 0 else 0
    den_unit = den // p**s
    if s >= N:
        raise PrecisionExhausted(
            f"denominator p-exponent {s} consumes the precision budget N={N}"
        )
    inv_unit = pow(den_unit, -1, pN)
    ints = [int(c * den) for c in z.coords]
    xi = tower.zeta_image() ** (k // z.order)
    acc = tower.zero()
    unit_scale = inv_unit % pN
    for c in reversed(ints):
        acc = acc * xi + tower.from_int(c)
    acc = acc * unit_scale
    return PadicElt(tower, s, acc.mat)


def padic_valuation(elt: PadicElt):
    """Exact valuation (v(p) = 1) or ABOVE_PRECISION if elt = 0 mod p^N."""
    t = elt.tower
    p, N, e = t.p, t.precision, t.e_ram
    best: Fraction | None = None
    for j, row in enumerate(elt.mat):
        vmin = None
        for c in row:
            c %= t.modulus
            if c:
                v = valuation(c, p)
                if vmin is None or v < vmin:
                    vmin = v
                    if vmin == 0:
                        break
        if vmin is None:
            continue
        cand = Fraction(vmin) + Fraction(j, e)
        if best is None or cand < best:
            best = cand
    if best is None:
        return ABOVE_PRECISION
    return best - elt.shift


def padic_residue(elt: PadicElt) -> tuple[int, ...]:
    """Image in the residue field F_{p^f} as coefficients on 1..x^(f-1).

    Requires v(elt) >= 0; elements of positive valuation map to 0.
    """
    v = padic_valuation(elt)
    if v is ABOVE_PRECISION:
        raise PrecisionExhausted("cannot reduce: element vanishes mod p^N")
    if v < 0:
        raise ValueError("cannot reduce an element of negative valuation")
    p = elt.tower.p
    ps = p**elt.shift
    row0 = elt.mat[0]
    for row in elt.mat:
        assert all(c % ps == 0 for c in row), "integral element must clear its shift"
    return tuple(c // ps % p for c in row0)


def teichmuller(a: int, p: int, precision: int) -> int:
    """The Teichmueller representative of a mod p^precision.

    >>> teichmuller(2, 5, 2)
    7
    """
    pN = p**precision
    x = a % pN
    while True:
        y = pow(x, p, pN)
        if y == x:
            return x
        x = y


def cyclo_valuation(z: CycloElt, p: int, n_start: int = N_START):
    """Valuation of a nonzero cyclotomic number at the chosen place.

    Runs the precision ladder N = n_start, 2 n_start, ... up to N_CAP and
    raises PrecisionExhausted if the ladder ends without a decision.
    Returns (valuation, tower used).
    """
    if z.is_zero():
        raise ZeroDivisionError("the valuation of 0 is +infinity")
    n = n_start
    while n <= N_CAP:
        tower = build_tower(p, z.order, n)
        try:
            v = padic_valuation(embed_padic(z, tower))
        except PrecisionExhausted:
            n *= 2
            continue
        if v is not ABOVE_PRECISION:
            return v, tower
        n *= 2
    raise PrecisionExhausted(
        f"valuation undecided at the precision cap N={N_CAP} (p={p}, k={z.order})"
    )


def char_is_omega_power_mod_p(chi: DirichletChar, p: int, t: int) -> bool:
    """Does chi reduce to omega^t mod the chosen place above p?

    Tested on the generators of (Z/lcm(f, p))^*, which suffices by
    multiplicativity: the residue of chi(g) (p-power-order parts reduce
    to 1) must equal g^t mod p.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    f = chi.modulus
    m_mod = lcm(f, p)
    k, _ = _char_data(chi.modulus, chi.exponents)
    a_wild = factorize(k).get(p, 0)
    k1 = k // p**a_wild
    # residue of zeta_k^m: the p-power part drops to 1 and the tame part is
    # x^(beta m) under the CRT normalisation used by build_tower.
    beta = pow(p**a_wild, -1, k1) if k1 > 1 else 1
    fct = list(residue_factor(p, k1))
    for g, _o in unit_group_basis(m_mod).generators:
        m = eval_exponent(chi, g)
        assert m is not None
        lhs = _pm_powmod([0, 1], m * beta % k1, fct, p)
        rhs = [pow(g, t, p)]
        _pm_trim(rhs)
        if _pm_trim(lhs[:]) != rhs:
            return False
    return True
