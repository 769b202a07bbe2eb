"""Stable-range branching and tensor multiplicities for classical groups.

Each operation is a finite Littlewood-Richardson sum.  The answers are exact
and n-independent once the rank clears the stated stable bound; below the
bound the formulas are not guaranteed, so a policy decides between raising
and computing anyway with a warning.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import LabelError, StableRangeError, StableRangeWarning
from .lr import lr_coefficient, lr_multi
from .partitions import (
    Partition,
    Signature,
    as_partition,
    check_signature_rank,
    even_column_partitions,
    even_row_partitions,
    is_admissible_o,
    partitions_of,
    signature_weight,
)


@dataclass(frozen=True)
class StablePolicy:
    mode: str  # "enforce" or "warn_and_compute"


ENFORCE = StablePolicy("enforce")
WARN_AND_COMPUTE = StablePolicy("warn_and_compute")


def _gate(ok: bool, bound: str, policy: StablePolicy) -> None:
    if ok:
        return
    if policy.mode == "enforce":
        raise StableRangeError(f"outside the stable range: requires {bound}")
    warnings.warn(f"computing outside the stable range ({bound})", StableRangeWarning,
                  stacklevel=3)


def gl_to_o_bound(lam) -> str:
    return f"n > 2*len(lam) = {2 * len(as_partition(lam))}"


def gl_to_o_stable(lam, n: int) -> bool:
    return n > 2 * len(as_partition(lam))


def gl_to_o(lam, mu, n: int, policy: StablePolicy = ENFORCE) -> int:
    """Multiplicity of the O_n irrep mu in the GL_n irrep lam (Littlewood)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if len(lam) > n:
        raise LabelError(f"{lam} has more than {n} rows")
    if not is_admissible_o(mu, n):
        raise LabelError(f"{mu} is not an admissible O_{n} label")
    _gate(gl_to_o_stable(lam, n), gl_to_o_bound(lam), policy)
    rest = sum(lam) - sum(mu)
    if rest < 0 or rest % 2:
        return 0
    return sum(lr_coefficient(lam, mu, delta)
               for delta in even_row_partitions(rest, len(lam)))


def gl_to_sp_bound(lam) -> str:
    return f"n >= len(lam) = {len(as_partition(lam))}"


def gl_to_sp_stable(lam, n: int) -> bool:
    return n >= len(as_partition(lam))


def gl_to_sp(lam, mu, n: int, policy: StablePolicy = ENFORCE) -> int:
    """Multiplicity of the Sp_{2n} irrep mu in the GL_{2n} irrep lam."""
    lam, mu = as_partition(lam), as_partition(mu)
    if len(lam) > 2 * n:
        raise LabelError(f"{lam} has more than {2 * n} rows")
    if len(mu) > n:
        raise LabelError(f"{mu} has more than {n} rows (Sp rank {n})")
    _gate(gl_to_sp_stable(lam, n), gl_to_sp_bound(lam), policy)
    rest = sum(lam) - sum(mu)
    if rest < 0 or rest % 2:
        return 0
    return sum(lr_coefficient(lam, mu, delta)
               for delta in even_column_partitions(rest, len(lam)))


def _triple_diagonal(mu: Partition, nu: Partition, lam: Partition) -> int:
    """sum over (alpha, beta, delta) of c^lam_{alpha,beta} c^mu_{alpha,delta} c^nu_{beta,delta}."""
    two_sa = sum(lam) + sum(mu) - sum(nu)
    two_sb = sum(lam) + sum(nu) - sum(mu)
    two_sd = sum(mu) + sum(nu) - sum(lam)
    if min(two_sa, two_sb, two_sd) < 0 or two_sa % 2:
        return 0
    sa, sb, sd = two_sa // 2, two_sb // 2, two_sd // 2
    total = 0
    for alpha in partitions_of(sa, max_length=min(len(lam), len(mu))):
        if not _under(alpha, lam) or not _under(alpha, mu):
            continue
        for beta in partitions_of(sb, max_length=min(len(lam), len(nu))):
            c_lab = lr_coefficient(lam, alpha, beta)
            if not c_lab:
                continue
            for delta in partitions_of(sd, max_length=min(len(mu), len(nu))):
                c_mad = lr_coefficient(mu, alpha, delta)
                if not c_mad:
                    continue
                c_nbd = lr_coefficient(nu, beta, delta)
                if c_nbd:
                    total += c_lab * c_mad * c_nbd
    return total


def _under(inner, outer) -> bool:
    return len(inner) <= len(outer) and all(inner[i] <= outer[i] for i in range(len(inner)))


def o_tensor_bound(mu, nu) -> str:
    return f"n > 2*(len(mu)+len(nu)) = {2 * (len(as_partition(mu)) + len(as_partition(nu)))}"


def o_tensor_stable_range(mu, nu, n: int) -> bool:
    return n > 2 * (len(as_partition(mu)) + len(as_partition(nu)))


def o_tensor_stable(mu, nu, lam, n: int, policy: StablePolicy = ENFORCE) -> int:
    """Multiplicity of the O_n irrep lam in the tensor product mu x nu."""
    mu, nu, lam = as_partition(mu), as_partition(nu), as_partition(lam)
    for label in (mu, nu, lam):
        if not is_admissible_o(label, n):
            raise LabelError(f"{label} is not an admissible O_{n} label")
    _gate(o_tensor_stable_range(mu, nu, n), o_tensor_bound(mu, nu), policy)
    return _triple_diagonal(mu, nu, lam)


def sp_tensor_bound(mu, nu) -> str:
    return f"n > len(mu)+len(nu) = {len(as_partition(mu)) + len(as_partition(nu))}"


def sp_tensor_stable_range(mu, nu, n: int) -> bool:
    return n > len(as_partition(mu)) + len(as_partition(nu))


def sp_tensor_stable(mu, nu, lam, n: int, policy: StablePolicy = ENFORCE) -> int:
    """Multiplicity of the Sp_{2n} irrep lam in the tensor product mu x nu."""
    mu, nu, lam = as_partition(mu), as_partition(nu), as_partition(lam)
    for label in (mu, nu, lam):
        if len(label) > n:
            raise LabelError(f"{label} has more than {n} rows (Sp rank {n})")
    _gate(sp_tensor_stable_range(mu, nu, n), sp_tensor_bound(mu, nu), policy)
    return _triple_diagonal(mu, nu, lam)


def o_restrict_bound(lam) -> str:
    return f"min(n, m) > 2*len(lam) = {2 * len(as_partition(lam))}"


def o_restrict_stable_range(lam, n: int, m: int) -> bool:
    return min(n, m) > 2 * len(as_partition(lam))


def o_restrict_stable(lam, mu, nu, n: int, m: int, policy: StablePolicy = ENFORCE) -> int:
    """Multiplicity of mu x nu in the restriction of the O_{n+m} irrep lam to O_n x O_m."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if not is_admissible_o(lam, n + m):
        raise LabelError(f"{lam} is not an admissible O_{n + m} label")
    if not is_admissible_o(mu, n):
        raise LabelError(f"{mu} is not an admissible O_{n} label")
    if not is_admissible_o(nu, m):
        raise LabelError(f"{nu} is not an admissible O_{m} label")
    _gate(o_restrict_stable_range(lam, n, m), o_restrict_bound(lam), policy)
    rest = sum(lam) - sum(mu) - sum(nu)
    if rest < 0 or rest % 2:
        return 0
    return sum(lr_multi(lam, [mu, nu, delta])
               for delta in even_row_partitions(rest, len(lam)))


def gl_tensor_rational(mu: Signature, nu: Signature, lam: Signature, n: int) -> int:
    """Multiplicity of lam in mu x nu for rational GL_n irreps.

    Twisting by enough powers of the determinant reduces each factor to a
    polynomial diagram on n rows; the answer is a single LR coefficient and
    is invariant under further determinant shifts.
    """
    for sig in (mu, nu, lam):
        check_signature_rank(sig, n)
    k_mu = mu.minus[0] if mu.minus else 0
    k_nu = nu.minus[0] if nu.minus else 0
    return _shifted_lr(mu, nu, lam, n, k_mu, k_nu)


def _shifted_lr(mu: Signature, nu: Signature, lam: Signature,
                n: int, k_mu: int, k_nu: int) -> int:
    mu_w = [a + k_mu for a in signature_weight(mu, n)]
    nu_w = [a + k_nu for a in signature_weight(nu, n)]
    lam_w = [a + k_mu + k_nu for a in signature_weight(lam, n)]
    if lam_w and lam_w[-1] < 0:
        return 0  # lam dips below the lowest weight the product can reach
    return lr_coefficient(as_partition(lam_w), as_partition(mu_w), as_partition(nu_w))
