"""Polynomial arithmetic over Z/NZ for block divisor searches.

The composite modulus rules out field tricks: no polynomial gcds, no
inverses of arbitrary leading coefficients. Every divisor used here is
monic (a product of X + c factors), which is exactly what reversal-Newton
division needs, so remainders never require an inverse mod N.

Multiplication above a small cutoff goes through Kronecker substitution:
pack coefficients into fixed-width limbs of one big integer, multiply once,
unpack. That rides the platform's fast big-integer multiply instead of a
quadratic coefficient loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

try:
    from gmpy2 import mpz as _mpz
    from gmpy2 import pack as _pack
    from gmpy2 import unpack as _unpack
except ImportError:  # pragma: no cover
    _mpz = None
    _pack = None
    _unpack = None

# Below this many coefficients, schoolbook beats packing overhead.
_MUL_CUTOFF = 32
_DIV_CUTOFF = 32


def _big_mul(x: int, y: int) -> int:
    if _mpz is not None:
        return int(_mpz(x) * _mpz(y))
    return x * y


@dataclass(frozen=True)
class PolyModN:
    """Coefficients ascending (coeffs[i] is the X**i term), reduced mod
    modulus, trailing zeros stripped; the zero polynomial is ()."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        reduced = [c % self.modulus for c in self.coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        object.__setattr__(self, "coeffs", tuple(reduced))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def eval_at(self, x: int) -> int:
        """Horner evaluation; the reference against which the tree-based
        evaluator is checked."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc


@dataclass(frozen=True)
class ProductTree:
    """levels[0] holds the linear leaves; each later level pairs up the one
    below, carrying an odd tail node upward unchanged."""

    modulus: int
    levels: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def root(self) -> PolyModN:
        return PolyModN(self.modulus, self.levels[-1][0])


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul_schoolbook(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([c % n for c in out])


def _mul_kronecker(a: list[int], b: list[int], n: int) -> list[int]:
    # Product coefficients are sums of at most min(len) terms, each below
    # (n-1)^2, so this limb width cannot overflow into a neighbor.
    bound = min(len(a), len(b)) * (n - 1) * (n - 1)
    if _pack is not None:
        limb_bits = bound.bit_length()
        prod = _pack(a, limb_bits) * _pack(b, limb_bits)
        return _trim([int(c % n) for c in _unpack(prod, limb_bits)])
    limb = bound.bit_length() // 8 + 1
    buf_a = bytearray(len(a) * limb)
    for i, c in enumerate(a):
        if c:
            buf_a[i * limb : (i + 1) * limb] = c.to_bytes(limb, "little")
    buf_b = bytearray(len(b) * limb)
    for i, c in enumerate(b):
        if c:
            buf_b[i * limb : (i + 1) * limb] = c.to_bytes(limb, "little")
    prod = _big_mul(int.from_bytes(buf_a, "little"), int.from_bytes(buf_b, "little"))
    out_len = len(a) + len(b) - 1
    raw = prod.to_bytes(out_len * limb, "little")
    return _trim(
        [int.from_bytes(raw[i * limb : (i + 1) * limb], "little") % n for i in range(out_len)]
    )


def _mul_lists(a: list[int], b: list[int], n: int) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < _MUL_CUTOFF:
        return _mul_schoolbook(a, b, n)
    return _mul_kronecker(a, b, n)


def _rem_schoolbook(f: list[int], g: list[int], n: int) -> list[int]:
    dg = len(g) - 1
    r = list(f)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            r[i] = 0
            for j in range(dg):
                r[i - dg + j] = (r[i - dg + j] - c * g[j]) % n
    return _trim(r[:dg])


def _inv_series(a: list[int], prec: int, n: int) -> list[int]:
    # Newton: h <- h*(2 - a*h); needs a[0] == 1, true for reversed monics.
    h = [1]
    k = 1
    while k < prec:
        k = min(2 * k, prec)
        ah = _mul_lists(a[:k], h, n)[:k]
        t = [(-c) % n for c in ah]
        if t:
            t[0] = (t[0] + 2) % n
        else:
            t = [2 % n]
        h = _mul_lists(h, t, n)[:k]
    return h[:prec]


def _rem_newton(f: list[int], g: list[int], n: int) -> list[int]:
    df, dg = len(f) - 1, len(g) - 1
    m = df - dg + 1
    rev_f = f[::-1]
    rev_g = g[::-1]
    inv = _inv_series(rev_g, m, n)
    q_rev = _mul_lists(rev_f[:m], inv, n)[:m]
    q_rev += [0] * (m - len(q_rev))
    q = q_rev[::-1]
    qg = _mul_lists(q, g, n)
    return _trim([(f[i] - (qg[i] if i < len(qg) else 0)) % n for i in range(dg)])


def _rem_lists(f: list[int], g: list[int], n: int) -> list[int]:
    if len(g) < 2:
        raise ValueError("division by a constant polynomial")
    if g[-1] % n != 1:
        raise ValueError("divisor must be monic")
    if len(f) < len(g):
        return _trim(list(f))
    if len(g) - 1 < _DIV_CUTOFF or len(f) - len(g) < _DIV_CUTOFF:
        return _rem_schoolbook(f, g, n)
    return _rem_newton(f, g, n)


def poly_mul(a: PolyModN, b: PolyModN) -> PolyModN:
    if a.modulus != b.modulus:
        raise ValueError("modulus mismatch")
    return PolyModN(a.modulus, tuple(_mul_lists(list(a.coeffs), list(b.coeffs), a.modulus)))


def poly_mod(f: PolyModN, g: PolyModN) -> PolyModN:
    """Remainder of f divided by monic g."""
    if f.modulus != g.modulus:
        raise ValueError("modulus mismatch")
    return PolyModN(f.modulus, tuple(_rem_lists(list(f.coeffs), list(g.coeffs), f.modulus)))


def _build_tree(leaves: list[list[int]], n: int) -> ProductTree:
    levels = [leaves]
    while len(levels[-1]) > 1:
        prev = levels[-1]
        nxt = [_mul_lists(prev[i], prev[i + 1], n) for i in range(0, len(prev) - 1, 2)]
        if len(prev) % 2:
            nxt.append(prev[-1])
        levels.append(nxt)
    return ProductTree(n, tuple(tuple(tuple(node) for node in level) for level in levels))


def build_linear_product(constants: Sequence[int], modulus: int) -> ProductTree:
    """Product tree for prod_j (X + constants[j]) mod modulus."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if not constants:
        return ProductTree(modulus, (((1 % modulus,),),))
    leaves = [[c % modulus, 1 % modulus] for c in constants]
    return _build_tree(leaves, modulus)


def multipoint_eval(f: PolyModN, points: Sequence[int]) -> list[int]:
    """[f(p) for p in points] via a subproduct/remainder tree pair.

    Cost is quasi-linear in len(points) + deg f, against len(points) * deg f
    for repeated Horner."""
    n = f.modulus
    if not points:
        return []
    if len(points) == 1 or f.degree < 1:
        return [f.eval_at(p) for p in points]
    tree = _build_tree([[(n - p % n) % n, 1 % n] for p in points], n)
    cur = [_rem_lists(list(f.coeffs), list(tree.levels[-1][0]), n)]
    for lev in range(len(tree.levels) - 2, -1, -1):
        nodes = tree.levels[lev]
        cur = [_rem_lists(cur[i // 2], list(nodes[i]), n) for i in range(len(nodes))]
    return [r[0] if r else 0 for r in cur]
