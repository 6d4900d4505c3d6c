"""Matrix models of the two irreducible families at an odd root of unity.

Basis convention: v_j is the j-th standard basis column (indices 0..d-1) and
matrices act on the left, so the family formulas become column operations.
Exact matrices are nested lists of CycloNum/GaussCyclo entries; the floating
backend uses numpy complex128 arrays.  Every constructor verifies the
defining relations before returning (exactly on the exact backend).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .scalar import (ABS_TOL, REL_TOL, CycloNum, GaussCyclo, RootContext,
                     gauss_i, is_exact, q_number, q_power, scalar_from_json,
                     scalar_to_json, to_complex)

# ---------------------------------------------------------------------------
# exact matrix helpers (nested lists over CycloNum / GaussCyclo)
# ---------------------------------------------------------------------------


def ex_zeros(ctx: RootContext, n: int, m: int | None = None):
    z = ctx.zero()
    m = n if m is None else m
    return [[z] * m for _ in range(n)]


def ex_eye(ctx: RootContext, n: int):
    out = ex_zeros(ctx, n)
    one = ctx.one()
    for i in range(n):
        out[i][i] = one
    return out


def ex_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    zero = A[0][0].ctx.zero()
    out = []
    for i in range(n):
        row_a = A[i]
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                a = row_a[t]
                if a.is_zero():
                    continue
                b = B[t][j]
                if b.is_zero():
                    continue
                p = a * b
                acc = p if acc is None else acc + p
            row.append(acc if acc is not None else zero)
        out.append(row)
    return out


def ex_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def ex_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def ex_scale(A, s):
    if (isinstance(s, CycloNum) and s.is_zero()) or (isinstance(s, GaussCyclo) and s.is_zero()):
        ctx = A[0][0].ctx
        return ex_zeros(ctx, len(A), len(A[0]))
    return [[(s * a if not a.is_zero() else a) for a in row] for row in A]


def ex_is_zero(A) -> bool:
    return all(a.is_zero() for row in A for a in row)


def ex_kron(A, B):
    nb, mb = len(B), len(B[0])
    zero = A[0][0].ctx.zero()
    out = []
    for i in range(len(A)):
        for ib in range(nb):
            row = []
            for j in range(len(A[0])):
                a = A[i][j]
                if a.is_zero():
                    row.extend([zero] * mb)
                else:
                    row.extend([a * b if not b.is_zero() else zero for b in B[ib]])
            out.append(row)
    return out


def ex_pow(A, n: int, ctx: RootContext):
    out = ex_eye(ctx, len(A))
    for _ in range(n):
        out = ex_mul(out, A)
    return out


def ex_conj_transpose(A):
    n, m = len(A), len(A[0])
    return [[A[j][i].conjugate() for j in range(n)] for i in range(m)]


def ex_to_complex(A) -> np.ndarray:
    return np.array([[to_complex(a) for a in row] for row in A], dtype=complex)


def ex_residual(A) -> float:
    """0.0 when the exact matrix is exactly zero, else its largest embedded
    entry magnitude (diagnostic for a failed exact check)."""
    if ex_is_zero(A):
        return 0.0
    return float(np.max(np.abs(ex_to_complex(A))))


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------


class Representation:
    """Matrices of X, Y, Z, Z^-1 for one member of a family, plus provenance."""

    __slots__ = ("ctx", "dim", "family", "params", "backend",
                 "X", "Y", "Z", "Zinv", "_cache")

    def __init__(self, ctx, dim, family, params, backend, X, Y, Z, Zinv):
        self.ctx = ctx
        self.dim = dim
        self.family = family
        self.params = params
        self.backend = backend
        self.X, self.Y, self.Z, self.Zinv = X, Y, Z, Zinv
        self._cache = {}

    def mats(self) -> dict:
        return {"X": self.X, "Y": self.Y, "Z": self.Z, "Zinv": self.Zinv}

    def complex_mats(self) -> dict:
        """The four generator matrices as numpy complex arrays (cached)."""
        got = self._cache.get("complex_mats")
        if got is None:
            if self.backend == "exact":
                got = {k: ex_to_complex(v) for k, v in self.mats().items()}
            else:
                got = {k: np.array(v, dtype=complex) for k, v in self.mats().items()}
            self._cache["complex_mats"] = got
        return got

    def __repr__(self):
        return (f"Representation(family={self.family!r}, dim={self.dim}, "
                f"P={self.ctx.P}, Q={self.ctx.Q}, backend={self.backend!r}, "
                f"params={self.params!r})")


def build_family1(ctx: RootContext, r: int, sign: int = 1,
                  validate: bool = True) -> Representation:
    """(r+1)-dimensional representation:
        Z v_j = sign q^(r-2j) v_j,
        X v_j = -q^(r-2j-1) [r-j] v_(j+1),
        Y v_j = [j] v_(j-1).
    Exact backend."""
    if not 0 <= r <= ctx.Q - 1:
        raise ValueError(f"r must lie in 0..Q-1, got {r}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    d = r + 1
    Z = ex_zeros(ctx, d)
    Zinv = ex_zeros(ctx, d)
    Xm = ex_zeros(ctx, d)
    Ym = ex_zeros(ctx, d)
    for j in range(d):
        zj = q_power(ctx, r - 2 * j)
        if sign < 0:
            zj = -zj
        Z[j][j] = zj
        Zinv[j][j] = zj.inverse()
        if j + 1 < d:
            Xm[j + 1][j] = -(q_power(ctx, r - 2 * j - 1) * q_number(ctx, r - j))
        if j - 1 >= 0:
            Ym[j - 1][j] = q_number(ctx, j)
    rep = Representation(ctx, d, 1, {"r": r, "sign": sign}, "exact", Xm, Ym, Z, Zinv)
    if validate:
        _require_defining(rep)
    return rep


def build_family2(ctx: RootContext, lam, a, b, backend: str = "approx",
                  validate: bool = True) -> Representation:
    """Q-dimensional cyclic representation:
        Z v_j = lam q^(2j) v_j,
        X v_j = -i q^(j-1) (a b - [j] (lam q^(j-1) - lam^-1 q^(1-j))/(q - q^-1)) v_(j-1),
                wrapping X v_0 = -i q^-1 a v_(Q-1),
        Y v_j = -i lam q^(j+1) v_(j+1),  wrapping Y v_(Q-1) = -i lam b v_0.
    Floating backend by default; pass backend="exact" with exact lam, a, b
    (CycloNum / GaussCyclo / rationals) to stay in Q(zeta_Q)(i)."""
    Q = ctx.Q
    if backend == "exact":
        lam = GaussCyclo.from_scalar(lam, ctx)
        a = GaussCyclo.from_scalar(a, ctx)
        b = GaussCyclo.from_scalar(b, ctx)
        if lam.is_zero():
            raise ValueError("lambda must be nonzero")
        mi = -gauss_i(ctx)
        delta = q_power(ctx, 1) - q_power(ctx, -1)
        lam_inv = lam.inverse()
        Z = ex_zeros(ctx, Q)
        Zinv = ex_zeros(ctx, Q)
        Xm = ex_zeros(ctx, Q)
        Ym = ex_zeros(ctx, Q)
        for j in range(Q):
            zj = lam * q_power(ctx, 2 * j)
            Z[j][j] = zj
            Zinv[j][j] = zj.inverse()
            if j != 0:
                core = a * b - q_number(ctx, j) * (lam * q_power(ctx, j - 1)
                                                   - lam_inv * q_power(ctx, 1 - j)) / delta
                Xm[j - 1][j] = mi * q_power(ctx, j - 1) * core
            if j != Q - 1:
                Ym[j + 1][j] = mi * lam * q_power(ctx, j + 1)
        Xm[Q - 1][0] = mi * q_power(ctx, -1) * a
        Ym[0][Q - 1] = mi * lam * b
        rep = Representation(ctx, Q, 2, {"lambda": lam, "a": a, "b": b},
                             "exact", Xm, Ym, Z, Zinv)
    elif backend == "approx":
        lam = complex(to_complex(lam))
        a = complex(to_complex(a))
        b = complex(to_complex(b))
        if lam == 0:
            raise ValueError("lambda must be nonzero")
        q = ctx.q_complex
        delta = q - 1 / q
        Z = np.zeros((Q, Q), dtype=complex)
        Zinv = np.zeros((Q, Q), dtype=complex)
        Xm = np.zeros((Q, Q), dtype=complex)
        Ym = np.zeros((Q, Q), dtype=complex)
        for j in range(Q):
            zj = lam * q ** (2 * j)
            Z[j, j] = zj
            Zinv[j, j] = 1 / zj
            if j != 0:
                qnj = to_complex(q_number(ctx, j))
                core = a * b - qnj * (lam * q ** (j - 1) - q ** (1 - j) / lam) / delta
                Xm[j - 1, j] = -1j * q ** (j - 1) * core
            if j != Q - 1:
                Ym[j + 1, j] = -1j * lam * q ** (j + 1)
        Xm[Q - 1, 0] = -1j * a / q
        Ym[0, Q - 1] = -1j * lam * b
        rep = Representation(ctx, Q, 2, {"lambda": lam, "a": a, "b": b},
                             "approx", Xm, Ym, Z, Zinv)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    if validate:
        _require_defining(rep)
    return rep


def _require_defining(rep):
    report = verify_relations(rep, "defining")
    if not report.ok:
        raise ArithmeticError(f"construction violates the defining relations: {report}")


# ---------------------------------------------------------------------------
# generic matrix arithmetic over either backend
# ---------------------------------------------------------------------------


class _Ops:
    """Uniform matrix operations so relation checks are written once."""

    def __init__(self, rep: Representation):
        self.rep = rep
        self.exact = rep.backend == "exact"
        ctx = rep.ctx
        if self.exact:
            self.q = q_power(ctx, 1)
            self.qi = q_power(ctx, -1)
            self.eye = ex_eye(ctx, rep.dim)
            self.mul = ex_mul
            self.add = ex_add
            self.sub = ex_sub
            self.scale = lambda A, s: ex_scale(A, s)
            self.residual = ex_residual
        else:
            self.q = ctx.q_complex
            self.qi = 1 / ctx.q_complex
            self.eye = np.eye(rep.dim, dtype=complex)
            self.mul = lambda A, B: A @ B
            self.add = lambda A, B: A + B
            self.sub = lambda A, B: A - B
            self.scale = lambda A, s: s * A
            self.residual = lambda A: float(np.max(np.abs(A))) if A.size else 0.0

    def qnum(self, x):
        v = q_number(self.rep.ctx, x)
        return v if self.exact else to_complex(v)

    def scalar_mat(self, s):
        return self.scale(self.eye, s)

    def close(self, A, B, tol):
        diff = self.sub(A, B)
        r = self.residual(diff)
        if self.exact:
            return r == 0.0, r
        scale = max(1.0,
                    float(np.max(np.abs(A))) if A.size else 0.0,
                    float(np.max(np.abs(B))) if B.size else 0.0)
        return r <= tol * scale + ABS_TOL, r


# ---------------------------------------------------------------------------
# verification and derived matrices
# ---------------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    ok: bool
    residual: float
    detail: str = ""


@dataclass
class RelationReport:
    which: str
    checks: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def to_json(self) -> dict:
        return {
            "which": self.which,
            "ok": self.ok,
            "max_residual": self.max_residual,
            "checks": [{"name": c.name, "ok": c.ok, "residual": c.residual,
                        **({"detail": c.detail} if c.detail else {})}
                       for c in self.checks],
            **self.extra,
        }

    def __repr__(self):
        state = "pass" if self.ok else "FAIL"
        return f"RelationReport({self.which}: {state}, max_residual={self.max_residual:.3g})"


def j_matrix(rep: Representation, tol: float = REL_TOL):
    """(q X - q^-1 Y) Z^-1; asserts agreement with the equivalent form
    Z^-1 (q^-1 X - q Y) and caches the result on the representation."""
    got = rep._cache.get("J")
    if got is not None:
        return got
    ops = _Ops(rep)
    lhs = ops.mul(ops.sub(ops.scale(rep.X, ops.q), ops.scale(rep.Y, ops.qi)), rep.Zinv)
    rhs = ops.mul(rep.Zinv, ops.sub(ops.scale(rep.X, ops.qi), ops.scale(rep.Y, ops.q)))
    same, r = ops.close(lhs, rhs, tol)
    if not same:
        raise ArithmeticError(f"the two J forms disagree (residual {r:.3g}); "
                              "representation is corrupted")
    rep._cache["J"] = lhs
    return lhs


def j_matrix_complex(rep: Representation) -> np.ndarray:
    got = rep._cache.get("J_complex")
    if got is None:
        Jm = j_matrix(rep)
        got = ex_to_complex(Jm) if rep.backend == "exact" else np.array(Jm, dtype=complex)
        rep._cache["J_complex"] = got
    return got


def recover_xy(rep: Representation):
    """X' = (q J Z - q^-1 Z J)/(q^2 - q^-2) and the Y' counterpart; the
    round trip contract is X' = X, Y' = Y."""
    ops = _Ops(rep)
    Jm = j_matrix(rep)
    JZ = ops.mul(Jm, rep.Z)
    ZJ = ops.mul(rep.Z, Jm)
    if ops.exact:
        denom = (q_power(rep.ctx, 2) - q_power(rep.ctx, -2)).inverse()
    else:
        denom = 1 / (ops.q ** 2 - ops.qi ** 2)
    Xp = ops.scale(ops.sub(ops.scale(JZ, ops.q), ops.scale(ZJ, ops.qi)), denom)
    Yp = ops.scale(ops.sub(ops.scale(JZ, ops.qi), ops.scale(ZJ, ops.q)), denom)
    return Xp, Yp


def verify_relations(rep: Representation, which: str,
                     tol: float = REL_TOL) -> RelationReport:
    """which = defining | zj | central | star_original."""
    ops = _Ops(rep)
    X, Y, Z, Zinv = rep.X, rep.Y, rep.Z, rep.Zinv
    report = RelationReport(which=which)

    def check(name, A, B, detail=""):
        ok, r = ops.close(A, B, tol)
        report.checks.append(CheckResult(name, ok, r, detail))

    if which == "defining":
        check("Z Zi = 1", ops.mul(Z, Zinv), ops.eye)
        check("Zi Z = 1", ops.mul(Zinv, Z), ops.eye)
        check("Z X = q^-2 X Z", ops.mul(Z, X), ops.scale(ops.mul(X, Z), ops.qi * ops.qi))
        check("Z Y = q^2 Y Z", ops.mul(Z, Y), ops.scale(ops.mul(Y, Z), ops.q * ops.q))
        if ops.exact:
            delta_inv = (q_power(rep.ctx, 1) - q_power(rep.ctx, -1)).inverse()
        else:
            delta_inv = 1 / (ops.q - ops.qi)
        lhs = ops.sub(ops.scale(ops.mul(X, Y), ops.qi), ops.scale(ops.mul(Y, X), ops.q))
        rhs = ops.scale(ops.sub(ops.mul(Z, Z), ops.eye), delta_inv)
        check("q^-1 X Y - q Y X = (Z^2 - 1)/(q - q^-1)", lhs, rhs)
        return report

    if which == "zj":
        Jm = j_matrix(rep, tol)
        ZJ = ops.mul(Z, Jm)
        JZ = ops.mul(Jm, Z)
        ZJZ = ops.mul(ZJ, Z)
        zeros = ex_zeros(rep.ctx, rep.dim) if ops.exact \
            else np.zeros((rep.dim, rep.dim), dtype=complex)
        mid = ops.q ** 2 + ops.qi ** 2 if not ops.exact else \
            q_power(rep.ctx, 2) + q_power(rep.ctx, -2)
        lhs1 = ops.add(ops.sub(ops.mul(Z, ZJ), ops.scale(ZJZ, mid)), ops.mul(JZ, Z))
        check("Z^2 J - (q^2+q^-2) Z J Z + J Z^2 = 0", lhs1, zeros)
        front = (q_power(rep.ctx, 2) + rep.ctx.one() + q_power(rep.ctx, -2)) if ops.exact \
            else ops.q ** 2 + 1 + ops.qi ** 2
        t = q_power(rep.ctx, 1) + q_power(rep.ctx, -1) if ops.exact else ops.q + ops.qi
        t2 = t * t
        lhs2 = ops.sub(ops.sub(ops.sub(ops.scale(ops.mul(ops.mul(ZJ, Jm), Z), front),
                                       ops.mul(JZ, JZ)),
                               ops.mul(ops.mul(JZ, Z), Jm)),
                       ops.mul(ZJ, ZJ))
        rhs2 = ops.scale(ops.sub(ops.mul(Z, Z), ops.eye), t2)
        check("(q^2+1+q^-2) Z J^2 Z - J Z J Z - J Z^2 J - Z J Z J = [2]^2 (Z^2 - 1)",
              lhs2, rhs2)
        return report

    if which == "central":
        Jm = j_matrix(rep, tol)
        if ops.exact:
            ZQ = ex_pow(Z, rep.ctx.Q, rep.ctx)
        else:
            ZQ = np.linalg.matrix_power(Z, rep.ctx.Q)
        for name, M in (("X", X), ("Y", Y), ("J", Jm)):
            check(f"Z^Q {name} = {name} Z^Q", ops.mul(ZQ, M), ops.mul(M, ZQ))
        scalar = ZQ[0][0] if ops.exact else ZQ[0, 0]
        check("Z^Q is scalar", ZQ, ops.scalar_mat(scalar))
        report.extra["scalar"] = [to_complex(scalar).real, to_complex(scalar).imag]
        return report

    if which == "star_original":
        mats = rep.complex_mats()
        for name in ("X", "Y", "Z"):
            M = mats[name]
            r = float(np.max(np.abs(M.conj().T - M))) if M.size else 0.0
            scale = max(1.0, float(np.max(np.abs(M))) if M.size else 0.0)
            report.checks.append(CheckResult(f"{name} self-adjoint", r <= tol * scale, r))
        return report

    raise ValueError(f"unknown relation set {which!r}")


# ---------------------------------------------------------------------------
# tensor products via the coproduct
# ---------------------------------------------------------------------------


def tensor_rep(a: Representation, b: Representation,
               validate: bool = True) -> Representation:
    """Action on the tensor product through the coproduct:
    X -> 1 (x) X + X (x) Z, Y -> 1 (x) Y + Y (x) Z, Z -> Z (x) Z."""
    if a.ctx != b.ctx:
        raise ValueError("tensor factors live in different root contexts")
    ctx = a.ctx
    if a.backend == "exact" and b.backend == "exact":
        ia = ex_eye(ctx, a.dim)
        X = ex_add(ex_kron(ia, b.X), ex_kron(a.X, b.Z))
        Y = ex_add(ex_kron(ia, b.Y), ex_kron(a.Y, b.Z))
        Z = ex_kron(a.Z, b.Z)
        Zinv = ex_kron(a.Zinv, b.Zinv)
        backend = "exact"
    else:
        am, bm = a.complex_mats(), b.complex_mats()
        ia = np.eye(a.dim, dtype=complex)
        X = np.kron(ia, bm["X"]) + np.kron(am["X"], bm["Z"])
        Y = np.kron(ia, bm["Y"]) + np.kron(am["Y"], bm["Z"])
        Z = np.kron(am["Z"], bm["Z"])
        Zinv = np.kron(am["Zinv"], bm["Zinv"])
        backend = "approx"
    rep = Representation(ctx, a.dim * b.dim, "tensor",
                         {"left": a.params, "right": b.params,
                          "families": [a.family, b.family]},
                         backend, X, Y, Z, Zinv)
    if validate:
        _require_defining(rep)
    return rep


def tensor_j_formula_residual(a: Representation, b: Representation,
                              t: Representation | None = None) -> float:
    """|J(a (x) b) - (Z^-1 (x) J + J (x) 1)| in the embedded norm."""
    t = t or tensor_rep(a, b)
    Jt = j_matrix_complex(t)
    za = a.complex_mats()["Zinv"]
    target = (np.kron(za, j_matrix_complex(b))
              + np.kron(j_matrix_complex(a), np.eye(b.dim, dtype=complex)))
    return float(np.max(np.abs(Jt - target)))


# ---------------------------------------------------------------------------
# family intersection
# ---------------------------------------------------------------------------


@dataclass
class IntersectionReport:
    ok: bool
    z_spectra_dev: float
    j_spectra_dev: float
    trace_dev: float
    sign: int
    tol: float

    def to_json(self):
        return {"ok": self.ok, "sign": self.sign, "tol": self.tol,
                "z_spectra_dev": self.z_spectra_dev,
                "j_spectra_dev": self.j_spectra_dev,
                "trace_dev": self.trace_dev}


def _sorted_multiset(values) -> list[complex]:
    return sorted((complex(v) for v in values), key=lambda z: (round(z.real, 12), round(z.imag, 12)))


def multiset_deviation(a, b) -> float:
    a, b = _sorted_multiset(a), _sorted_multiset(b)
    if len(a) != len(b):
        return float("inf")
    return max((abs(x - y) for x, y in zip(a, b)), default=0.0)


def intersection_check(ctx: RootContext, sign: int = 1,
                       tol: float = 1e-8) -> IntersectionReport:
    """The d = Q member of the first family coincides with the second-family
    point (lambda = sign q^(1-Q), a = b = 0): compare Z spectra, J spectra and
    traces of all words in X, Y, Z up to length 4 (isomorphism invariants)."""
    from .spectral import eigen_solve

    r1 = build_family1(ctx, ctx.Q - 1, sign)
    lam = sign * ctx.q_complex ** (1 - ctx.Q)
    r2 = build_family2(ctx, lam, 0.0, 0.0)

    m1, m2 = r1.complex_mats(), r2.complex_mats()
    z_dev = multiset_deviation(np.diag(m1["Z"]), np.diag(m2["Z"]))
    j_dev = multiset_deviation([p.value for p in eigen_solve(j_matrix_complex(r1))],
                               [p.value for p in eigen_solve(j_matrix_complex(r2))])
    trace_dev = 0.0
    for length in range(1, 5):
        for word in itertools.product("XYZ", repeat=length):
            t1 = np.eye(ctx.Q, dtype=complex)
            t2 = np.eye(ctx.Q, dtype=complex)
            for ch in word:
                t1 = t1 @ m1[ch]
                t2 = t2 @ m2[ch]
            trace_dev = max(trace_dev, float(abs(np.trace(t1) - np.trace(t2))))
    z_dev, j_dev = float(z_dev), float(j_dev)
    ok = z_dev <= tol and j_dev <= tol and trace_dev <= tol
    return IntersectionReport(ok, z_dev, j_dev, trace_dev, sign, tol)


# ---------------------------------------------------------------------------
# JSON export / import
# ---------------------------------------------------------------------------


def representation_to_json(rep: Representation) -> dict:
    def mat_json(M):
        if rep.backend == "exact":
            return [[scalar_to_json(a) for a in row] for row in M]
        return [[scalar_to_json(complex(a)) for a in row] for row in np.asarray(M)]

    def params_json(v):
        if is_exact(v) or isinstance(v, complex):
            return scalar_to_json(v)
        if isinstance(v, dict):
            return {k: params_json(u) for k, u in v.items()}
        if isinstance(v, (list, tuple)):
            return [params_json(u) for u in v]
        return v

    params = {k: params_json(v) for k, v in rep.params.items()}
    return {
        "P": rep.ctx.P,
        "Q": rep.ctx.Q,
        "family": rep.family,
        "params": params,
        "backend": rep.backend,
        "generators": {
            "X": mat_json(rep.X),
            "Y": mat_json(rep.Y),
            "Z": mat_json(rep.Z),
        },
    }


def representation_from_json(data: dict) -> Representation:
    ctx = RootContext(int(data["P"]), int(data["Q"]))
    backend = data["backend"]
    gens = data["generators"]

    if backend == "exact":
        def mat(rows):
            return [[scalar_from_json(a, ctx) for a in row] for row in rows]
        X, Y, Z = mat(gens["X"]), mat(gens["Y"]), mat(gens["Z"])
        d = len(Z)
        Zinv = ex_zeros(ctx, d)
        for i in range(d):
            for j in range(d):
                if i != j and not Z[i][j].is_zero():
                    raise ValueError("Z is expected diagonal in this export")
            Zinv[i][i] = Z[i][i].inverse()
    else:
        def mat(rows):
            return np.array([[complex(a[0], a[1]) for a in row] for row in rows],
                            dtype=complex)
        X, Y, Z = mat(gens["X"]), mat(gens["Y"]), mat(gens["Z"])
        d = Z.shape[0]
        if float(np.max(np.abs(Z - np.diag(np.diag(Z))))) > 0.0:
            raise ValueError("Z is expected diagonal in this export")
        Zinv = np.diag(1 / np.diag(Z))
    return Representation(ctx, d, data["family"], dict(data.get("params", {})),
                          backend, X, Y, Z, Zinv)
