"""The convolution algebra of an action, its embeddings and automorphisms.

For a finite-dimensional Hopf algebra every linear map H -> A has finite
rank, so the convolution algebra is A (x) H* in its entirety.  Elements are
stored on the basis E_{p,q} = (h_p -> a_q), row-major index p * dim(A) + q,
equivalently as the dim(A) x dim(H) matrix of values.

The two H-module structures (right-translation and the twisted action that
uses the given action on values) and the mutually inverse automorphisms
that exchange them are materialized as explicit matrices, so every claimed
identity is an exhaustive finite check.
"""

from __future__ import annotations

from functools import cached_property

from .linalg import (Matrix, Subspace, kernel, subspace_intersect, solve,
                     stable_subspaces, subspace_count)
from .hopf import FiniteAlgebra
from .action import ModuleAlgebraAction, hit_action
from .report import Report

DEFAULT_DIM_CAP = 64


class ConvElement:
    """An element of the convolution algebra: coordinates over E_{p,q}."""

    __slots__ = ("conv", "coords")

    def __init__(self, conv, coords):
        if len(coords) != conv.dim:
            raise ValueError("coordinate length mismatch")
        self.conv = conv
        self.coords = list(coords)

    def value_matrix(self):
        """dim(A) x dim(H) matrix: column p = value at the p-th Hopf basis."""
        nA, nH = self.conv.alg.dim, self.conv.hopf.dim
        return [[self.coords[p * nA + q] for p in range(nH)] for q in range(nA)]

    def value_at(self, p):
        nA = self.conv.alg.dim
        return self.coords[p * nA: (p + 1) * nA]

    def __eq__(self, other):
        return (isinstance(other, ConvElement) and self.conv is other.conv
                and self.coords == other.coords)

    def to_json(self):
        F = self.conv.field
        return [[F.render(c) for c in row] for row in self.value_matrix()]

    def __repr__(self):
        return f"ConvElement({self.coords!r})"


class ConvolutionAlgebra:
    """B = Hom(H, A) with (f*g)(h) = f(h_1) g(h_2), built from an action."""

    def __init__(self, act: ModuleAlgebraAction, dim_cap=DEFAULT_DIM_CAP):
        self.action = act
        self.hopf = act.hopf
        self.alg = act.alg
        self.dim = self.hopf.dim * self.alg.dim
        if self.dim > dim_cap:
            raise ValueError(
                f"convolution algebra dim {self.dim} exceeds cap {dim_cap}")
        self.field = act.field

    def index(self, p, q):
        return p * self.alg.dim + q

    @cached_property
    def algebra(self) -> FiniteAlgebra:
        """Structure constants of B on the E_{p,q} basis."""
        F = self.field
        nH, nA = self.hopf.dim, self.alg.dim
        n = self.dim
        comul = self.hopf.comul
        mult = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
        for p in range(nH):
            for r in range(nH):
                row = p * nH + r
                lcol = [comul.data[row][l] for l in range(nH)]
                nz = [(l, c) for l, c in enumerate(lcol) if not F.is_zero(c)]
                if not nz:
                    continue
                for q in range(nA):
                    for s in range(nA):
                        sp = self.alg.mult_sparse[q][s]
                        if not sp:
                            continue
                        target = mult[self.index(p, q)][self.index(r, s)]
                        for l, c in nz:
                            for m, d in sp:
                                idx = self.index(l, m)
                                target[idx] = F.add(target[idx], F.mul(c, d))
        unit = [F.zero] * n
        for p in range(nH):
            e = self.hopf.counit[p]
            if not F.is_zero(e):
                for q, u in enumerate(self.alg.unit):
                    if not F.is_zero(u):
                        unit[self.index(p, q)] = F.mul(e, u)
        name = f"conv:{self.action.name}" if self.action.name else None
        return FiniteAlgebra(F, n, mult, unit, name=name)

    # -- embeddings -----------------------------------------------------------

    @cached_property
    def iota_matrix(self) -> Matrix:
        """a -> a (x) eps."""
        F = self.field
        nH, nA = self.hopf.dim, self.alg.dim
        m = Matrix.zeros(F, self.dim, nA)
        for j in range(nA):
            for p in range(nH):
                m.data[self.index(p, j)][j] = self.hopf.counit[p]
        return m

    @cached_property
    def del_matrix(self) -> Matrix:
        """a -> (h -> h.a)."""
        F = self.field
        nH, nA = self.hopf.dim, self.alg.dim
        m = Matrix.zeros(F, self.dim, nA)
        for j in range(nA):
            for p in range(nH):
                for q in range(nA):
                    m.data[self.index(p, q)][j] = self.action.tensor[p][j][q]
        return m

    @cached_property
    def ustar_matrix(self) -> Matrix:
        """f -> 1_A (x) f."""
        F = self.field
        nH, nA = self.hopf.dim, self.alg.dim
        m = Matrix.zeros(F, self.dim, nH)
        for p in range(nH):
            for q, u in enumerate(self.alg.unit):
                m.data[self.index(p, q)][p] = u
        return m

    def iota(self, avec) -> ConvElement:
        return ConvElement(self, self.iota_matrix.vec_mul(avec))

    def del_embed(self, avec) -> ConvElement:
        return ConvElement(self, self.del_matrix.vec_mul(avec))

    def ustar(self, fvec) -> ConvElement:
        return ConvElement(self, self.ustar_matrix.vec_mul(fvec))

    def one(self) -> ConvElement:
        return ConvElement(self, self.algebra.unit)

    def mul(self, b1: ConvElement, b2: ConvElement) -> ConvElement:
        return ConvElement(self, self.algebra.multiply(b1.coords, b2.coords))

    # -- the twist automorphisms ------------------------------------------------

    @cached_property
    def phi_matrix(self) -> Matrix:
        """b -> (h -> h_1 . b(h_2)) on coordinates."""
        F = self.field
        nH, nA = self.hopf.dim, self.alg.dim
        cols = self.hopf.comul_sparse
        m = Matrix.zeros(F, self.dim, self.dim)
        for p in range(nH):
            for q in range(nA):
                col = self.index(p, q)
                for l in range(nH):
                    for (u, v, c) in cols[l]:
                        if v != p:
                            continue
                        for mm in range(nA):
                            t = self.action.tensor[u][q][mm]
                            if not F.is_zero(t):
                                row = self.index(l, mm)
                                m.data[row][col] = F.add(m.data[row][col], F.mul(c, t))
        return m

    @cached_property
    def psi_matrix(self) -> Matrix:
        """b -> (h -> S(h_1) . b(h_2)) on coordinates."""
        F = self.field
        nH, nA = self.hopf.dim, self.alg.dim
        cols = self.hopf.comul_sparse
        S = self.hopf.antipode
        m = Matrix.zeros(F, self.dim, self.dim)
        for p in range(nH):
            for q in range(nA):
                col = self.index(p, q)
                for l in range(nH):
                    for (u, v, c) in cols[l]:
                        if v != p:
                            continue
                        for w in range(nH):
                            sc = S.data[w][u]
                            if F.is_zero(sc):
                                continue
                            csc = F.mul(c, sc)
                            for mm in range(nA):
                                t = self.action.tensor[w][q][mm]
                                if not F.is_zero(t):
                                    row = self.index(l, mm)
                                    m.data[row][col] = F.add(m.data[row][col],
                                                             F.mul(csc, t))
        return m

    def phi(self, b: ConvElement) -> ConvElement:
        return ConvElement(self, self.phi_matrix.vec_mul(b.coords))

    def psi(self, b: ConvElement) -> ConvElement:
        return ConvElement(self, self.psi_matrix.vec_mul(b.coords))

    # -- the two H-actions on B -------------------------------------------------

    @cached_property
    def rh_operators(self):
        """Right-translation operators: (h -> b)(k) = b(k h), one per basis."""
        F = self.field
        nH, nA = self.hopf.dim, self.alg.dim
        multH = self.hopf.alg.mult
        ops = []
        for i in range(nH):
            m = Matrix.zeros(F, self.dim, self.dim)
            for l in range(nH):
                for j in range(nH):
                    c = multH[l][i][j]
                    if F.is_zero(c):
                        continue
                    for q in range(nA):
                        m.data[self.index(l, q)][self.index(j, q)] = \
                            F.add(m.data[self.index(l, q)][self.index(j, q)], c)
            ops.append(m)
        return ops

    @cached_property
    def dot_operators(self):
        """Twisted operators: (h . b)(k) = h_1 . b(k h_2), one per basis."""
        F = self.field
        nH, nA = self.hopf.dim, self.alg.dim
        multH = self.hopf.alg.mult
        cols = self.hopf.comul_sparse
        ops = []
        for i in range(nH):
            m = Matrix.zeros(F, self.dim, self.dim)
            for (u, v, c) in cols[i]:
                for l in range(nH):
                    for j in range(nH):
                        d = multH[l][v][j]
                        if F.is_zero(d):
                            continue
                        cd = F.mul(c, d)
                        for q in range(nA):
                            for mm in range(nA):
                                t = self.action.tensor[u][q][mm]
                                if not F.is_zero(t):
                                    row = self.index(l, mm)
                                    colx = self.index(j, q)
                                    m.data[row][colx] = F.add(m.data[row][colx],
                                                              F.mul(cd, t))
            ops.append(m)
        return ops

    def rh_act(self, hvec, b: ConvElement) -> ConvElement:
        return ConvElement(self, self._apply_ops(self.rh_operators, hvec, b.coords))

    def dot_act(self, hvec, b: ConvElement) -> ConvElement:
        return ConvElement(self, self._apply_ops(self.dot_operators, hvec, b.coords))

    def _apply_ops(self, ops, hvec, coords):
        F = self.field
        out = [F.zero] * self.dim
        for i, c in enumerate(hvec):
            if F.is_zero(c):
                continue
            img = ops[i].vec_mul(coords)
            out = [F.add(out[k], F.mul(c, img[k])) for k in range(self.dim)]
        return out

    def invariants_of(self, ops) -> Subspace:
        """Joint eigenspace: op_i b = eps(h_i) b for all basis operators."""
        F = self.field
        rows = []
        for i, op in enumerate(ops):
            e = self.hopf.counit[i]
            for r in range(self.dim):
                row = list(op.data[r])
                row[r] = F.sub(row[r], e)
                rows.append(row)
        return kernel(Matrix.from_rows(F, rows, self.dim))

    @cached_property
    def iota_image(self) -> Subspace:
        return Subspace.from_vectors(
            self.field, self.dim,
            [[self.iota_matrix.data[r][j] for r in range(self.dim)]
             for j in range(self.alg.dim)])

    @cached_property
    def psi_iota_image(self) -> Subspace:
        m = self.psi_matrix.mat_mul(self.iota_matrix)
        return Subspace.from_vectors(
            self.field, self.dim,
            [[m.data[r][j] for r in range(self.dim)] for j in range(self.alg.dim)])

    def tensor_with_dual(self, sub_a: Subspace, dual_sub: Subspace = None) -> Subspace:
        """W (x) O as a subspace of B, for W a subspace of A.

        O defaults to the whole dual; a smaller coefficient subalgebra may
        be passed explicitly as a subspace certified by
        :func:`hopfact.action.verify_sub_hopf`.
        """
        F = self.field
        nH, nA = self.hopf.dim, self.alg.dim
        if dual_sub is None:
            duals = [[F.one if t == p else F.zero for t in range(nH)]
                     for p in range(nH)]
        else:
            duals = dual_sub.basis_vectors()
        vecs = []
        for row in sub_a.rows:
            for f in duals:
                v = [F.zero] * self.dim
                for p, fp in enumerate(f):
                    if F.is_zero(fp):
                        continue
                    for q, x in enumerate(row):
                        if not F.is_zero(x):
                            v[self.index(p, q)] = F.mul(fp, x)
                vecs.append(v)
        return Subspace.from_vectors(F, self.dim, vecs)

    def pull_back_iota(self, vec):
        """Coordinates a with iota(a) = vec, or None."""
        return solve(self.iota_matrix, vec)


# -- identity batteries --------------------------------------------------------

def embedding_report(conv: ConvolutionAlgebra) -> Report:
    """The three canonical maps into B are unital algebra embeddings, and
    the constant-value copy of A commutes with the dual copy of H*."""
    rep = Report("embeddings", details={"fixture": conv.action.name})
    F = conv.field
    A, H = conv.alg, conv.hopf
    B = conv.algebra
    if conv.iota(A.unit).coords != B.unit:
        rep.fail({"map": "iota", "identity": "unit"})
    if conv.del_embed(A.unit).coords != B.unit:
        rep.fail({"map": "del", "identity": "unit"})
    eps = list(H.counit)
    if conv.ustar(eps).coords != B.unit:
        rep.fail({"map": "ustar", "identity": "unit"})
    for i in range(A.dim):
        for j in range(A.dim):
            prod = A.basis_product(i, j)
            for tag, emb in (("iota", conv.iota), ("del", conv.del_embed)):
                lhs = emb(prod).coords
                rhs = conv.mul(emb(A.basis_vector(i)), emb(A.basis_vector(j))).coords
                if lhs != rhs:
                    rep.fail({"map": tag, "pair": [i, j]})
    from .action import dual_product
    nH = H.dim
    for i in range(nH):
        fi = [F.one if t == i else F.zero for t in range(nH)]
        for j in range(nH):
            fj = [F.one if t == j else F.zero for t in range(nH)]
            lhs = conv.ustar(dual_product(H, fi, fj)).coords
            rhs = conv.mul(conv.ustar(fi), conv.ustar(fj)).coords
            if lhs != rhs:
                rep.fail({"map": "ustar", "pair": [i, j]})
    # iota(A) commutes with ustar(H*)
    for i in range(A.dim):
        a = conv.iota(A.basis_vector(i))
        for j in range(nH):
            f = conv.ustar([F.one if t == j else F.zero for t in range(nH)])
            if conv.mul(a, f).coords != conv.mul(f, a).coords:
                rep.fail({"identity": "iota-ustar-commute", "pair": [i, j]})
    return rep


def check_intertwining(conv: ConvolutionAlgebra) -> Report:
    """Phi((iota a) b) = (del a)(Phi b) and Phi(h.b) = h->(Phi b), with the
    inverse-twist forms, on every basis element.  Needs no cocommutativity."""
    rep = Report("intertwining", details={"fixture": conv.action.name})
    A, H = conv.alg, conv.hopf
    F = conv.field
    nB = conv.dim
    basis = [ConvElement(conv, [F.one if t == r else F.zero for t in range(nB)])
             for r in range(nB)]
    for i in range(A.dim):
        a = A.basis_vector(i)
        ia, da = conv.iota(a), conv.del_embed(a)
        for r, b in enumerate(basis):
            lhs = conv.phi(conv.mul(ia, b)).coords
            rhs = conv.mul(da, conv.phi(b)).coords
            if lhs != rhs:
                rep.fail({"identity": "phi-iota", "a": i, "b": r})
            lhs2 = conv.psi(conv.mul(da, b)).coords
            rhs2 = conv.mul(ia, conv.psi(b)).coords
            if lhs2 != rhs2:
                rep.fail({"identity": "psi-del", "a": i, "b": r})
    for hidx in range(H.dim):
        h = [F.one if t == hidx else F.zero for t in range(H.dim)]
        for r, b in enumerate(basis):
            lhs = conv.phi(conv.dot_act(h, b)).coords
            rhs = conv.rh_act(h, conv.phi(b)).coords
            if lhs != rhs:
                rep.fail({"identity": "phi-exchanges-actions", "h": hidx, "b": r})
            lhs2 = conv.dot_act(h, conv.psi(b)).coords
            rhs2 = conv.psi(conv.rh_act(h, b)).coords
            if lhs2 != rhs2:
                rep.fail({"identity": "psi-exchanges-actions", "h": hidx, "b": r})
    return rep


def identity_report(conv: ConvolutionAlgebra) -> Report:
    """The full per-fixture identity battery.

    Covers: convolution associativity/unit, both action formulas against
    their tensor-split forms on A (x) H*, the intertwining identities, the
    twists being mutually inverse and fixing the unit, the factorization of
    the value-evaluation embedding through the twist, and the computation of
    the right-translation invariants.
    """
    rep = Report("identity-suite", details={"fixture": conv.action.name})
    F = conv.field
    A, H = conv.alg, conv.hopf
    nA, nH, nB = A.dim, H.dim, conv.dim
    from .hopf import verify_algebra
    base = verify_algebra(conv.algebra)
    if not base.ok:
        rep.fail({"identity": "convolution-associativity"})
        rep.witnesses.extend(base.witnesses[:3])

    emb = embedding_report(conv)
    if not emb.ok:
        rep.fail({"identity": "embeddings"})
        rep.witnesses.extend(emb.witnesses[:3])

    # action formulas against the tensor-split forms, via the hit action
    hit = hit_action(H)
    for i in range(nH):
        h = [F.one if t == i else F.zero for t in range(nH)]
        for p in range(nH):
            for q in range(nA):
                b = ConvElement(conv, [F.one if t == conv.index(p, q) else F.zero
                                       for t in range(nB)])
                # h -> (a (x) f) = a (x) (h -> f)
                lhs = conv.rh_act(h, b).coords
                rhs = [F.zero] * nB
                for l in range(nH):
                    c = hit.tensor[i][p][l]
                    if not F.is_zero(c):
                        rhs[conv.index(l, q)] = c
                if lhs != rhs:
                    rep.fail({"identity": "translation-splits", "h": i, "basis": [p, q]})
                # h . (a (x) f) = h_1.a (x) (h_2 -> f)
                lhs = conv.dot_act(h, b).coords
                rhs = [F.zero] * nB
                for (u, v, c) in H.comul_sparse[i]:
                    for m in range(nA):
                        t1 = conv.action.tensor[u][q][m]
                        if F.is_zero(t1):
                            continue
                        for l in range(nH):
                            t2 = hit.tensor[v][p][l]
                            if not F.is_zero(t2):
                                idx = conv.index(l, m)
                                rhs[idx] = F.add(rhs[idx], F.mul(c, F.mul(t1, t2)))
                if lhs != rhs:
                    rep.fail({"identity": "twist-splits", "h": i, "basis": [p, q]})

    inter = check_intertwining(conv)
    if not inter.ok:
        rep.fail({"identity": "intertwining"})
        rep.witnesses.extend(inter.witnesses[:3])

    # twists are mutually inverse, fix the unit, restrict to identity on H*
    ident = Matrix.identity(F, nB)
    if conv.phi_matrix.mat_mul(conv.psi_matrix) != ident:
        rep.fail({"identity": "phi-psi-inverse"})
    if conv.psi_matrix.mat_mul(conv.phi_matrix) != ident:
        rep.fail({"identity": "psi-phi-inverse"})
    if conv.phi(conv.one()).coords != conv.one().coords:
        rep.fail({"identity": "phi-fixes-unit"})
    for j in range(nH):
        f = [F.one if t == j else F.zero for t in range(nH)]
        uf = conv.ustar(f)
        if conv.phi(uf).coords != uf.coords:
            rep.fail({"identity": "phi-fixes-dual", "f": j})

    # evaluation embedding factors through the twist
    if conv.phi_matrix.mat_mul(conv.iota_matrix) != conv.del_matrix:
        rep.fail({"identity": "phi-iota-is-del"})

    # right-translation invariants are exactly the constant-value copy of A
    inv_rh = conv.invariants_of(conv.rh_operators)
    if inv_rh != conv.iota_image:
        rep.fail({"identity": "translation-invariants",
                  "got-dim": inv_rh.dim, "want-dim": conv.iota_image.dim})
    return rep


def check_dotinv(conv: ConvolutionAlgebra) -> Report:
    """Multiplicativity of the twist and the two invariant computations.

    Multiplicativity must hold when the Hopf algebra is cocommutative and is
    expected to fail (with a witness) on non-cocommutative fixtures with a
    nontrivial action; the verdict is recorded, not asserted, so suites can
    pair it with the fixture's cocommutativity flag.
    """
    from .hopf import is_cocommutative
    rep = Report("twist-multiplicativity", details={"fixture": conv.action.name})
    F = conv.field
    nB = conv.dim
    cocomm = is_cocommutative(conv.hopf)
    rep.details["cocommutative"] = cocomm
    witness = None
    phicols = [conv.phi_matrix.vec_mul([F.one if t == r else F.zero
                                        for t in range(nB)]) for r in range(nB)]
    B = conv.algebra
    for i in range(nB):
        for j in range(nB):
            lhs = conv.phi_matrix.vec_mul(B.basis_product(i, j))
            rhs = B.multiply(phicols[i], phicols[j])
            if lhs != rhs:
                witness = {"pair": [i, j]}
                break
        if witness:
            break
    rep.details["multiplicative"] = witness is None
    if witness:
        rep.witnesses.append(witness)
    if cocomm and witness is not None:
        rep.status = "fail"

    inv_dot = conv.invariants_of(conv.dot_operators)
    rep.details["twist-invariants-dim"] = inv_dot.dim
    rep.details["twist-invariants-match"] = (inv_dot == conv.psi_iota_image)
    if cocomm and not rep.details["twist-invariants-match"]:
        rep.status = "fail"
        rep.witnesses.append({"identity": "twist-invariants"})
    inv_rh = conv.invariants_of(conv.rh_operators)
    if inv_rh != conv.iota_image:
        rep.status = "fail"
        rep.witnesses.append({"identity": "translation-invariants"})
    return rep


# -- ideal-lattice transport ---------------------------------------------------

def transport_subspace(conv: ConvolutionAlgebra, sub_a: Subspace) -> Subspace:
    """Image of I (x) H* under the inverse twist, as a subspace of B."""
    if sub_a.ambient_dim != conv.alg.dim:
        raise ValueError("transport: subspace must live in A")
    tens = conv.tensor_with_dual(sub_a)
    vecs = [conv.psi_matrix.vec_mul(list(r)) for r in tens.rows]
    return Subspace.from_vectors(conv.field, conv.dim, vecs)


def restrict_subspace(conv: ConvolutionAlgebra, sub_b: Subspace) -> Subspace:
    """Apply the twist, intersect with the constant-value copy of A, and
    return coordinates in A."""
    if sub_b.ambient_dim != conv.dim:
        raise ValueError("restrict: subspace must live in B")
    vecs = [conv.phi_matrix.vec_mul(list(r)) for r in sub_b.rows]
    img = Subspace.from_vectors(conv.field, conv.dim, vecs)
    inter = subspace_intersect(img, conv.iota_image)
    pulled = []
    for r in inter.rows:
        a = conv.pull_back_iota(list(r))
        if a is None:
            raise RuntimeError("intersection escaped the embedded copy of A")
        pulled.append(a)
    return Subspace.from_vectors(conv.field, conv.alg.dim, pulled)


def invariant_contract(conv: ConvolutionAlgebra, sub_b: Subspace) -> Subspace:
    """Intersect with the invariant subalgebra copy of A; A-coordinates."""
    inter = subspace_intersect(sub_b, conv.psi_iota_image)
    psi_iota = conv.psi_matrix.mat_mul(conv.iota_matrix)
    pulled = []
    for r in inter.rows:
        a = solve(psi_iota, list(r))
        if a is None:
            raise RuntimeError("intersection escaped the invariant copy of A")
        pulled.append(a)
    return Subspace.from_vectors(conv.field, conv.alg.dim, pulled)


def invariant_extend(conv: ConvolutionAlgebra, sub_a: Subspace) -> Subspace:
    """Two-sided ideal of B generated by the invariant-subalgebra image."""
    from .hopf import ideal_closure
    psi_iota = conv.psi_matrix.mat_mul(conv.iota_matrix)
    vecs = [psi_iota.vec_mul(list(r)) for r in sub_a.rows]
    return ideal_closure(conv.algebra, vecs)


def subspace_dot_stable(conv: ConvolutionAlgebra, sub: Subspace) -> bool:
    return all(sub.contains(op.vec_mul(list(r)))
               for op in conv.dot_operators for r in sub.rows)


def check_transport(conv: ConvolutionAlgebra, sub_a: Subspace) -> Report:
    """Round-trip of the three-corner ideal maps on one ideal of A."""
    from .hopf import subspace_is_ideal
    rep = Report("ideal-transport", details={"fixture": conv.action.name,
                                             "ideal-dim": sub_a.dim})
    if not subspace_is_ideal(conv.alg, sub_a):
        rep.status = "error"
        rep.details["reason"] = "input subspace is not a two-sided ideal"
        return rep
    t = transport_subspace(conv, sub_a)
    if not subspace_is_ideal(conv.algebra, t):
        rep.fail({"identity": "transport-is-ideal"})
    if not subspace_dot_stable(conv, t):
        rep.fail({"identity": "transport-is-stable"})
    if t.dim != sub_a.dim * conv.hopf.dim:
        rep.fail({"identity": "transport-dim"})
    back = restrict_subspace(conv, t)
    if back != sub_a:
        rep.fail({"identity": "restrict-roundtrip"})
    contracted = invariant_contract(conv, t)
    if contracted != sub_a:
        rep.fail({"identity": "contract-roundtrip"})
    ext = invariant_extend(conv, contracted)
    if ext != t:
        rep.fail({"identity": "extend-roundtrip"})
    return rep


def enumerate_h_ideals(conv: ConvolutionAlgebra, bound=None):
    """All twist-stable two-sided ideals of B by exhaustion (prime fields)."""
    B = conv.algebra
    ops = []
    for i in range(B.dim):
        e = B.basis_vector(i)
        ops.append(B.left_mult_matrix(e))
        ops.append(B.right_mult_matrix(e))
    ops.extend(conv.dot_operators)
    return stable_subspaces(conv.field, B.dim, ops, bound)


def check_dotinv_lattice(conv: ConvolutionAlgebra, bound=None) -> Report:
    """Exhaustive three-corner bijection check over a prime field.

    Enumerates every ideal of A and every twist-stable ideal of B and
    verifies that transport is a bijection between them commuting with the
    restriction and invariant-corner maps.
    """
    from .hopf import subspace_is_ideal
    rep = Report("ideal-lattice-bijection", details={"fixture": conv.action.name})
    A = conv.alg
    ops_a = []
    for i in range(A.dim):
        e = A.basis_vector(i)
        ops_a.append(A.left_mult_matrix(e))
        ops_a.append(A.right_mult_matrix(e))
    ideals_a = stable_subspaces(conv.field, A.dim, ops_a, bound)
    rep.details["ideals-of-A"] = len(ideals_a)
    transported = {}
    for ia in ideals_a:
        t = transport_subspace(conv, ia)
        sub = check_transport(conv, ia)
        if not sub.ok:
            rep.fail({"ideal-dim": ia.dim})
            rep.witnesses.extend(sub.witnesses[:2])
        transported[t.rows] = ia
    h_ideals = enumerate_h_ideals(conv, bound)
    rep.details["h-ideals-of-B"] = len(h_ideals)
    if len(h_ideals) != len(ideals_a):
        rep.fail({"identity": "corner-counts",
                  "ideals": len(ideals_a), "h-ideals": len(h_ideals)})
    for hb in h_ideals:
        if hb.rows not in transported:
            rep.fail({"identity": "unreached-h-ideal", "dim": hb.dim})
    return rep


def stability_scan(conv: ConvolutionAlgebra, bound=None) -> Report:
    """Exhaustive check that the subspaces of A (x) H* stable under right
    multiplication by the dual copy and under right translation are exactly
    the W (x) H*; the count must match the subspace count of A."""
    rep = Report("stability-scan", details={"fixture": conv.action.name})
    F = conv.field
    p = F.characteristic()
    if p != 2:
        rep.status = "error"
        rep.details["reason"] = "stability scan is an F_2 oracle"
        return rep
    B = conv.algebra
    ops = []
    for r in range(conv.hopf.dim):
        f = [F.one if t == r else F.zero for t in range(conv.hopf.dim)]
        ops.append(B.right_mult_matrix(conv.ustar_matrix.vec_mul(f)))
    ops.extend(conv.rh_operators)
    stable = stable_subspaces(F, conv.dim, ops, bound)
    rep.details["stable-count"] = len(stable)
    expected = {}
    from .linalg import enumerate_subspaces
    for w in enumerate_subspaces(F, conv.alg.dim, bound):
        expected[conv.tensor_with_dual(w).rows] = w
    rep.details["expected-count"] = len(expected)
    rep.details["subspace-count-of-A"] = subspace_count(p, conv.alg.dim)
    if len(expected) != rep.details["subspace-count-of-A"]:
        rep.fail({"identity": "expected-count-mismatch"})
    got = {s.rows for s in stable}
    if got != set(expected):
        rep.fail({"identity": "stable-set-mismatch",
                  "only-got": len(got - set(expected)),
                  "only-expected": len(set(expected) - got)})
    return rep
