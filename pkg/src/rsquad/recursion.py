"""Integer linear recursions for weight sequences.

Covers the explicit rules matrix of the monomial functions ``(0,t)_n``,
exact minimal polynomials of integer matrices, the closed-form recursion
polynomial ``(x - 2)(x^(2t) - 2^t)``, exact recurrence fitting from a
weight sequence, and sequence extension in both directions.

Integer polynomials are tuples of coefficients in ascending order of
degree (index ``k`` is the coefficient of ``x^k``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import FalsificationError, InconsistentDataError, NoRecurrenceError

__all__ = [
    "Direction",
    "IntMatrix",
    "RecurrenceSpec",
    "RootModulus",
    "extend",
    "fit_recurrence",
    "format_poly",
    "hadamard_matrix",
    "hadamard_power_report",
    "minimal_polynomial",
    "mrs_recurrence",
    "mrs_recursion_poly",
    "poly_mul",
    "root_moduli",
    "rules_core",
    "rules_matrix",
]

MAX_RULES_T = 10

IntPoly = tuple[int, ...]


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def format_poly(p: IntPoly, var: str = "x") -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        mag = abs(c)
        body = f"{mag}{mono}" if mag != 1 or not mono else mono
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("IntMatrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_array(cls, a) -> IntMatrix:
        return cls(tuple(tuple(int(v) for v in row) for row in np.asarray(a, dtype=object)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def array(self) -> np.ndarray:
        out = np.empty((self.dim, self.dim), dtype=object)
        for i, r in enumerate(self.rows):
            out[i, :] = r
        return out

    def nonzeros(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for i, r in enumerate(self.rows) for j, v in enumerate(r) if v]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return IntMatrix.from_array(_sparse_right_mul(self.array(), other.nonzeros(), other.dim))

    def __pow__(self, e: int) -> IntMatrix:
        out = IntMatrix.identity(self.dim).array()
        nz = self.nonzeros()
        for _ in range(e):
            out = _sparse_right_mul(out, nz, self.dim)
        return IntMatrix.from_array(out)

    def __mul__(self, c: int) -> IntMatrix:
        return IntMatrix(tuple(tuple(c * v for v in r) for r in self.rows))

    def __neg__(self) -> IntMatrix:
        return self * -1


def _sparse_right_mul(a: np.ndarray, nonzeros, dim: int) -> np.ndarray:
    """``a @ M`` for ``M`` given by its nonzero entries, exact over Python ints."""
    out = np.zeros((a.shape[0], dim), dtype=object)
    for j, c, v in nonzeros:
        out[:, c] += v * a[:, j]
    return out


def rules_core(t: int) -> IntMatrix:
    """``R(t)``: rows ``mu^i(e+)``, ``mu^i(e-)`` for ``i < 2^(t-1)``, ``mu`` moving the last entry to the front."""
    if not 1 <= t <= MAX_RULES_T:
        raise ValueError(f"t must be in [1, {MAX_RULES_T}]")
    h = 1 << (t - 1)
    rows = []
    for i in range(h):
        for sign in (1, -1):
            row = [0] * (2 * h)
            row[i] = 1
            row[h + i] = sign
            rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def rules_matrix(t: int) -> IntMatrix:
    """``R'(t)``: ``R(t)`` bordered by the column ``(0,...,0,2)`` and row ``(0_h, 1_h, 2)``."""
    core = rules_core(t)
    h = 1 << (t - 1)
    rows = [r + (0,) for r in core.rows]
    rows.append((0,) * h + (1,) * h + (2,))
    return IntMatrix(tuple(rows))


def hadamard_matrix(t: int) -> IntMatrix:
    """Sylvester matrix ``M(t)`` of size ``2^t``: ``[[M, M], [M, -M]]`` from ``M(1) = [[1, 1], [1, -1]]``."""
    m = np.array([[1, 1], [1, -1]], dtype=object)
    for _ in range(t - 1):
        m = np.block([[m, m], [m, -m]])
    return IntMatrix.from_array(m)


def hadamard_power_report(t: int) -> dict:
    """Which powers of ``R(t)`` equal ``M(t)``, exactly or up to a row permutation.

    Also reports whether ``R(t)^(2t) = 2^t I`` and ``M(t)^2 = 2^t I``.
    """
    core, m = rules_core(t), hadamard_matrix(t)
    size = core.dim
    scaled_identity = IntMatrix.identity(size) * (1 << t)
    exact, permuted = [], []
    power = IntMatrix.identity(size)
    for k in range(1, 2 * t + 1):
        power = power @ core
        if power == m:
            exact.append(k)
        if sorted(power.rows) == sorted(m.rows):
            permuted.append(k)
    return {
        "t": t,
        "exact_powers": exact,
        "row_permuted_powers": permuted,
        "R_pow_2t_is_scaled_identity": core ** (2 * t) == scaled_identity,
        "M_squared_is_scaled_identity": m @ m == scaled_identity,
    }


_PRIMES = (2147483629, 2147483587, 2147483579)


def _solve_fraction(a: list[list[int]], b: list[int]) -> list[Fraction]:
    n = len(b)
    m = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _krylov_minpoly(powers_iter, prime: int) -> IntPoly | None:
    """Detect the first dependency of ``I, A, A^2, ...`` mod ``prime``; solve and verify it exactly."""
    flats: list[np.ndarray] = []
    basis: list[np.ndarray] = []
    pivots: list[int] = []
    for power in powers_iter:
        flat = power.ravel()
        flats.append(flat)
        v = np.array([int(x) % prime for x in flat], dtype=np.int64)
        for pc, row in zip(pivots, basis):
            c = int(v[pc])
            if c:
                v = (v - c * row) % prime
        nz = np.flatnonzero(v)
        if nz.size:
            pc = int(nz[0])
            v = v * pow(int(v[pc]), prime - 2, prime) % prime
            basis.append(v)
            pivots.append(pc)
            continue
        k = len(flats) - 1
        a = [[int(flats[i][pc]) for i in range(k)] for pc in pivots]
        rhs = [-int(flat[pc]) for pc in pivots]
        coeffs = _solve_fraction(a, rhs) if k else []
        if any(c.denominator != 1 for c in coeffs):
            return None
        ints = [int(c) for c in coeffs]
        residual = flat.copy()
        for c, f in zip(ints, flats):
            if c:
                residual = residual + c * f
        if any(residual):
            return None
        return tuple(ints) + (1,)
    raise AssertionError("Krylov sequence ended without a dependency")


def minimal_polynomial(m: IntMatrix) -> IntPoly:
    """Exact monic minimal polynomial of an integer matrix (ascending coefficients).

    The first linear dependency among ``I, m, m^2, ...`` is found modulo a
    31-bit prime, solved over the rationals on the pivot coordinates, and
    then verified on every entry with exact integers.  Independence mod a
    prime implies independence over Q, so the degree is minimal.
    """
    nz = m.nonzeros()

    def powers():
        cur = IntMatrix.identity(m.dim).array()
        for _ in range(m.dim + 1):
            yield cur
            cur = _sparse_right_mul(cur, nz, m.dim)

    for prime in _PRIMES:
        found = _krylov_minpoly(powers(), prime)
        if found is not None:
            return found
    raise FalsificationError("minimal polynomial could not be certified")


def mrs_recursion_poly(t: int) -> IntPoly:
    """``(x - 2)(x^(2t) - 2^t) = x^(2t+1) - 2x^(2t) - 2^t x + 2^(t+1)``."""
    if t < 1:
        raise ValueError("t must be positive")
    p = [0] * (2 * t + 2)
    p[2 * t + 1], p[2 * t], p[1], p[0] = 1, -2, -(1 << t), 1 << (t + 1)
    return tuple(p)


@dataclass(frozen=True)
class RecurrenceSpec:
    """``u(n) = sum_j coeffs[j-1] * u(n-j)``, holding on the sequence from index ``valid_from`` on."""

    coeffs: tuple[int, ...]
    valid_from: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("last coefficient must be nonzero (order must be minimal)")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def charpoly(self) -> IntPoly:
        r = self.order
        p = [0] * (r + 1)
        p[r] = 1
        for j, c in enumerate(self.coeffs, start=1):
            p[r - j] = -c
        return tuple(p)

    @classmethod
    def from_charpoly(cls, p: IntPoly, valid_from: int) -> RecurrenceSpec:
        if p[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")
        r = len(p) - 1
        return cls(tuple(-p[r - j] for j in range(1, r + 1)), valid_from)

    def describe(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{mag}u(n-{j})"))
        if not terms:
            return "u(n) = 0"
        body = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        body += "".join(f" {s} {t}" for s, t in terms[1:])
        return f"u(n) = {body}"

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": list(self.coeffs),
            "charpoly": list(self.charpoly),
            "valid_from": self.valid_from,
        }

    @classmethod
    def from_dict(cls, data: dict) -> RecurrenceSpec:
        spec = cls(tuple(data["coeffs"]), data["valid_from"])
        if "order" in data and data["order"] != spec.order:
            raise ValueError("order does not match the coefficient list")
        if "charpoly" in data and tuple(data["charpoly"]) != spec.charpoly:
            raise ValueError("charpoly does not match the coefficient list")
        return spec

    def holds_on(self, seq, start_index: int) -> bool:
        """Whether every term of ``seq`` at index ``>= valid_from + order`` obeys the recursion."""
        r = self.order
        for pos in range(len(seq)):
            n = start_index + pos
            if n - r < self.valid_from or pos - r < 0:
                continue
            if seq[pos] != sum(c * seq[pos - j] for j, c in enumerate(self.coeffs, start=1)):
                return False
        return True


def mrs_recurrence(t: int) -> RecurrenceSpec:
    return RecurrenceSpec.from_charpoly(mrs_recursion_poly(t), 2 * t + 1)


def _berlekamp_massey(seq: list[Fraction]) -> tuple[list[Fraction], int]:
    """Connection polynomial ``C`` (``C[0] = 1``) and linear complexity ``L`` over Q."""
    C, B = [Fraction(1)], [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for i, s in enumerate(seq):
        disc = s + sum(C[j] * seq[i - j] for j in range(1, min(L, len(C) - 1) + 1))
        if disc == 0:
            m += 1
            continue
        coef = disc / b
        T = list(C)
        need = len(B) + m
        if len(C) < need:
            C = C + [Fraction(0)] * (need - len(C))
        for j, bj in enumerate(B):
            C[j + m] -= coef * bj
        if 2 * L <= i:
            L, B, b, m = i + 1 - L, T, disc, 1
        else:
            m += 1
    C = C[: L + 1] + [Fraction(0)] * (L + 1 - len(C))
    return C, L


def fit_recurrence(seq, start_index: int = 1, *, margin: int = 1) -> RecurrenceSpec:
    """Minimal-order integer recursion satisfied by ``seq`` (first term at ``start_index``).

    Runs Berlekamp-Massey over the rationals.  A recursion of order ``L``
    is accepted only when at least ``2L + margin`` terms are available, so
    it is unique and at least ``margin`` terms confirm it.  When the minimal
    connection polynomial has trailing zero coefficients the lower-order
    recursion only starts later; ``valid_from`` moves accordingly.
    """
    seq = [int(s) for s in seq]
    if not seq:
        raise NoRecurrenceError("empty sequence")
    C, L = _berlekamp_massey([Fraction(s) for s in seq])
    if len(seq) < 2 * L + margin:
        raise NoRecurrenceError(
            f"complexity {L} needs at least {2 * L + margin} terms, got {len(seq)}"
        )
    if any(c.denominator != 1 for c in C):
        raise InconsistentDataError(f"minimal recursion has non-integer coefficients {C}")
    coeffs = [-int(c) for c in C[1:]]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    spec = RecurrenceSpec(tuple(coeffs), start_index + (L - len(coeffs)))
    if not spec.holds_on(seq, start_index):
        raise FalsificationError("fitted recursion does not reproduce its input")
    return spec


class Direction(str, enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


def extend(spec: RecurrenceSpec, seed, direction=Direction.FORWARD, count: int = 1) -> list[int]:
    """Extend ``order`` consecutive terms by ``count`` more terms.

    Forward returns ``seed + new``; backward returns ``new + seed`` (so the
    output is always in increasing index order).
    """
    direction = Direction(direction)
    r = spec.order
    seed = [int(s) for s in seed]
    if len(seed) != r:
        raise ValueError(f"seed must have exactly {r} terms")
    c = spec.coeffs
    if direction is Direction.FORWARD:
        out = list(seed)
        for _ in range(count):
            out.append(sum(c[j - 1] * out[-j] for j in range(1, r + 1)))
        return out
    out = list(seed)
    for _ in range(count):
        # u(n) = sum_{j<r} c_j u(n-j) + c_r u(n-r), n = index of out[r-1]
        window = out[:r]
        num = window[r - 1] - sum(c[j - 1] * window[r - 1 - j] for j in range(1, r))
        q, rem = divmod(num, c[r - 1])
        if rem:
            raise InconsistentDataError(f"backward step {num}/{c[r - 1]} is not an integer")
        out.insert(0, q)
    return out


@dataclass(frozen=True)
class RootModulus:
    root: complex
    modulus: float
    dev_sqrt2: float
    dev_2: float

    def nearest(self) -> str:
        return "sqrt2" if self.dev_sqrt2 <= self.dev_2 else "2"

    def to_dict(self) -> dict:
        return {
            "root": [self.root.real, self.root.imag],
            "modulus": self.modulus,
            "dev_sqrt2": self.dev_sqrt2,
            "dev_2": self.dev_2,
        }


def root_moduli(p: IntPoly) -> list[RootModulus]:
    """Numeric roots of ``p`` (companion eigenvalues, Newton-polished) and their moduli."""
    desc = np.array([float(c) for c in reversed(p)])
    deriv = np.polyder(desc)
    out = []
    for z in np.roots(desc):
        z = complex(z)
        for _ in range(3):
            dz = complex(np.polyval(deriv, z))
            if dz == 0:
                break
            z -= complex(np.polyval(desc, z)) / dz
        mod = abs(z)
        out.append(RootModulus(z, mod, abs(mod - 2 ** 0.5), abs(mod - 2.0)))
    return sorted(out, key=lambda r: (r.modulus, r.root.real, r.root.imag))
