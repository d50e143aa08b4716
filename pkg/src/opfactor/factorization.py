"""Kernel-driven factorization of operators.

Given elements f_1 .. f_k of a coefficient algebra, form the k x k
structure matrix

    Phi[l][i] = endo^l(f_i),   l = 0 .. k-1,

a generalized Wronskian (Casoratian in the difference case).  When Phi has
a two-sided inverse, three families of operators fall out of it:

  * dual operators P_i, rows of the inverse read as operators, which
    satisfy P_i(f_j) = delta_ij,
  * the interpolating operator sum(t_i . P_i) for any targets t_i, the
    unique operator of degree < k sending each f_i to t_i,
  * the kernel operator K = endo^k - sum(endo^k(f_i) . P_i), the monic
    degree-k operator annihilating every f_i.

Together with shifted copies endo^(i-k) . K for high powers, the P_i and K
form a second spanning family for operators: every L of degree <= m has
unique "hat" coefficients h_0 .. h_m with L = sum(h_i . Dhat_i) where

    Dhat_i = P_(i+1)         for i < k,
    Dhat_i = endo^(i-k) . K  for i >= k.

The low hat coefficients are exactly the values h_(i-1) = L(f_i), which is
what makes the family useful: an operator annihilates all the f_i exactly
when its first k hat coefficients vanish, and then the remaining ones
assemble the right factor Q with L = Q . K.

Everything here is verified as it is computed; a failed exact identity
raises VerificationFailed rather than returning a wrong answer.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .base import Algebra
from .errors import (
    CorollaryViolated,
    MixedAlgebras,
    NotAUnit,
    NotInKernel,
    NotIntertwinable,
    NotMonicizable,
    VerificationFailed,
)
from .ncmatrix import NCMatrix
from .operators import Operator


class KernelContext:
    """Everything derived from one tuple of kernel elements.

    Construction computes Phi, its verified two-sided inverse, the dual
    operators P, the images endo^k(f_i), and the kernel operator K, and
    then checks the defining identities P_i(f_j) = delta_ij and
    K(f_i) = 0.  NotInvertible propagates from the matrix inverse when
    the elements are not independent enough.

    Dhat operators above index k-1 are built on demand and cached; the
    cache only ever gains entries and every entry is determined by its
    index, so repeated or concurrent fills agree.
    """

    def __init__(self, algebra: Algebra, elements: Sequence):
        elements = tuple(elements)
        if not elements:
            raise ValueError("at least one kernel element is required")
        for f in elements:
            algebra.check(f)
        self.algebra = algebra
        self.f = elements
        k = len(elements)
        self.k = k

        # iterated images: rows[l][i] = endo^l(f_i), l = 0 .. k
        rows = [list(elements)]
        for _ in range(k):
            rows.append([algebra.endo(v) for v in rows[-1]])
        self.phi = NCMatrix.from_rows(algebra, rows[:k])
        self.phi_inv = self.phi.inverse()
        self.f_image = tuple(rows[k])

        self.P = tuple(
            Operator(algebra, tuple(self.phi_inv.entry(i, l) for l in range(k)))
            for i in range(k)
        )
        dual = Operator.zero(algebra)
        for img, p_op in zip(self.f_image, self.P):
            dual = dual + p_op.scale_left(img)
        self.K = Operator.d(algebra, k) - dual

        self._dhat = {}
        self._self_check()

    def _self_check(self):
        alg = self.algebra
        one, zero = alg.one(), alg.zero()
        for i, p_op in enumerate(self.P):
            for j, f in enumerate(self.f):
                want = one if i == j else zero
                if not alg.equal(p_op.apply(f), want):
                    raise VerificationFailed(
                        "dual operator P_%d fails on f_%d" % (i + 1, j + 1)
                    )
        for j, f in enumerate(self.f):
            if not alg.is_zero(self.K.apply(f)):
                raise VerificationFailed("kernel operator fails on f_%d" % (j + 1))

    def _check_op(self, op: Operator) -> None:
        if op.algebra != self.algebra:
            raise MixedAlgebras(
                "operator over %r used with a context over %r"
                % (op.algebra.describe(), self.algebra.describe())
            )

    # the second spanning family

    def dhat(self, i: int) -> Operator:
        if i < 0:
            raise ValueError("negative index")
        if i < self.k:
            return self.P[i]
        op = self._dhat.get(i)
        if op is None:
            op = Operator.d(self.algebra, i - self.k).compose(self.K)
            self._dhat[i] = op
        return op

    def interpolate(self, targets: Sequence) -> Operator:
        """The degree < k operator with f_i -> targets[i] for every i."""
        if len(targets) != self.k:
            raise ValueError(
                "expected %d targets, got %d" % (self.k, len(targets))
            )
        out = Operator.zero(self.algebra)
        for t, p_op in zip(targets, self.P):
            self.algebra.check(t)
            out = out + p_op.scale_left(t)
        return out

    def hat_coefficients(self, op: Operator) -> List:
        """Expand an operator over the Dhat family.

        Peels from the top: the hat coefficient at the highest power is
        the plain coefficient there, because Dhat_i is monic of degree i;
        subtracting h_i . Dhat_i drops the degree, and once everything
        above degree k is gone the rest is handled in closed form, with
        row-times-column products against Phi.  The expansion is verified
        by exact reconstruction before it is returned.
        """
        self._check_op(op)
        alg = self.algebra
        k = self.k
        m = max(len(op.coeffs) - 1, k - 1)
        hats = [alg.zero()] * (m + 1)
        rest = op
        for i in range(m, k - 1, -1):
            a = rest.coeff(i)
            if not alg.is_zero(a):
                hats[i] = a
                rest = rest - self.dhat(i).scale_left(a)
            if rest.degree >= i:
                raise VerificationFailed(
                    "degree did not drop while peeling at power %d" % i
                )
        for col in range(k):
            acc = alg.zero()
            for l in range(k):
                a = rest.coeff(l)
                if not alg.is_zero(a):
                    acc = alg.add(acc, alg.mul(a, self.phi.entry(l, col)))
            hats[col] = acc
        recon = Operator.zero(alg)
        for i, h in enumerate(hats):
            if not alg.is_zero(h):
                recon = recon + self.dhat(i).scale_left(h)
        if recon != op:
            raise VerificationFailed("hat expansion does not reconstruct")
        return hats

    def leading_coefficients_by_apply(self, op: Operator) -> Tuple:
        """The first k hat coefficients, computed independently: the hat
        coefficient at index i-1 equals op applied to f_i."""
        self._check_op(op)
        return tuple(op.apply(f) for f in self.f)

    def factorize(self, op: Operator) -> Operator:
        """Write op = Q . K, which is possible exactly when op kills
        every kernel element.  Returns Q; the identity is re-verified
        under operator equality before returning."""
        alg = self.algebra
        values = self.leading_coefficients_by_apply(op)
        offenders = [
            (i + 1, v) for i, v in enumerate(values) if not alg.is_zero(v)
        ]
        if offenders:
            raise NotInKernel(offenders, alg)
        hats = self.hat_coefficients(op)
        quotient = Operator(alg, tuple(hats[self.k:]))
        if quotient.compose(self.K) != op:
            raise VerificationFailed("factor does not recompose")
        return quotient

    def intertwiner(self, r_op: Operator) -> Operator:
        """Find Q with Q . K = K . R, which exists exactly when R maps
        each kernel element back into the kernel of K."""
        self._check_op(r_op)
        offenders = []
        for i, f in enumerate(self.f):
            image = self.K.apply(r_op.apply(f))
            if not self.algebra.is_zero(image):
                offenders.append((i + 1, image))
        if offenders:
            raise NotIntertwinable(offenders, self.algebra)
        return self.factorize(self.K.compose(r_op))

    def zero_on_low_filtration(self, op: Operator) -> bool:
        """For operators of degree below k: does op annihilate the whole
        kernel tuple?  True is only possible for the zero operator; a
        nonzero witness raises CorollaryViolated since it would
        contradict invertibility of Phi."""
        self._check_op(op)
        if not op.is_zero() and len(op.coeffs) > self.k:
            raise ValueError(
                "operator of degree %d is outside filtration level %d"
                % (len(op.coeffs) - 1, self.k - 1)
            )
        values = self.leading_coefficients_by_apply(op)
        if any(not self.algebra.is_zero(v) for v in values):
            return False
        if op.is_zero():
            return True
        raise CorollaryViolated(
            "nonzero operator %s of degree < %d annihilates the kernel"
            % (op, self.k)
        )


def right_divide_monic(op: Operator, divisor: Operator) -> Tuple[Operator, Operator]:
    """Long division from the right: op = Q . divisor + R with the
    representation degree of R below that of the divisor.

    The divisor's top coefficient must stay invertible while being pushed
    through powers of the endomorphism (for a monic divisor it is the
    constant 1 and this is automatic).  Used as an independent check of
    factorize: dividing by K must reproduce Q with zero remainder.
    """
    alg = op._same_algebra(divisor)
    if divisor.is_zero():
        raise NotMonicizable("cannot divide by the zero operator")
    d = len(divisor.coeffs) - 1
    lead = divisor.coeffs[-1]
    try:
        alg.try_invert(lead)
    except NotAUnit as exc:
        raise NotMonicizable(
            "leading coefficient %s is not a unit" % alg.format_element(lead)
        ) from exc
    quotient = Operator.zero(alg)
    rest = op
    while rest.degree >= d:
        m = len(rest.coeffs) - 1
        pushed = lead
        for _ in range(m - d):
            pushed = alg.twist(pushed).p
        try:
            inv = alg.try_invert(pushed)
        except NotAUnit as exc:
            raise NotMonicizable(
                "twisted leading coefficient %s is not a unit"
                % alg.format_element(pushed)
            ) from exc
        term = Operator(
            alg,
            (alg.zero(),) * (m - d) + (alg.mul(rest.coeffs[-1], inv),),
        )
        quotient = quotient + term
        rest = rest - term.compose(divisor)
        if rest.degree >= m:
            raise VerificationFailed("division step did not reduce the degree")
    return quotient, rest
