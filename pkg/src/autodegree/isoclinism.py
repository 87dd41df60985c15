"""Autoisoclinism between pairs (subgroup, group): witness search and checks.

Two pairs are autoisoclinic when three isomorphisms (psi between the
quotients by the autocentres, gamma between the automorphism groups, beta
between the autocommutator subgroups) make the coset autocommutator
pairing commute. The search enumerates gamma and psi deterministically and
derives beta from the diagram, so a returned witness commutes by
construction and is still re-verified from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from . import automorphisms as am
from .automorphisms import AutGroup, Automorphism
from .degree import BoundCheck, pr_definition
from .groups import (
    GroupError,
    GroupHom,
    GroupTable,
    InvariantError,
    PreconditionError,
    Quotient,
    SizeCapError,
    SubgroupSet,
    iter_isomorphisms,
    quotient_group,
    subgroup_as_group,
    whole_subgroup,
)


class PairingUndefinedError(GroupError):
    """The coset autocommutator pairing took two values on one coset."""


@dataclass(frozen=True)
class PairedGroups:
    """Everything the isoclinism diagram needs about one pair (H, G).

    ``pairing[c][a]`` is the autocommutator [x, alpha] of the canonical
    (smallest) representative x of coset c with automorphism index a,
    expressed as an element index of ``commutator_group``.
    """

    group: GroupTable
    subgroup: SubgroupSet
    auts: AutGroup
    autocentre: SubgroupSet
    commutator: SubgroupSet
    quotient: Quotient
    commutator_group: GroupTable
    commutator_embedding: tuple[int, ...]
    pairing: tuple[tuple[int, ...], ...]
    pairing_defect: Optional[str]

    @cached_property
    def commutator_position(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.commutator_embedding)}

    def label(self) -> str:
        g = self.group.label()
        if self.subgroup.is_whole():
            return g
        return f"{g}[{','.join(str(m) for m in self.subgroup.members)}]"


def make_pair(
    G: GroupTable,
    H: Optional[SubgroupSet] = None,
    auts: Optional[AutGroup] = None,
    aut_cap: int = 24,
) -> PairedGroups:
    """Assemble the derived structures for one (subgroup, group) pair.

    Checks the coset pairing for representative independence while
    building it; a disagreement is recorded in ``pairing_defect`` rather
    than raised, so callers can downgrade the pair instead of crashing.
    """
    if H is None:
        H = whole_subgroup(G)
    A = auts if auts is not None else am.compute_aut(G, cap=aut_cap)
    core = am.autocentre(H, A)
    ksub = am.autocommutator_subgroup(H, A)
    quot = quotient_group(G, H, core)
    k_group, k_embed = subgroup_as_group(G, ksub)
    k_pos = {m: i for i, m in enumerate(k_embed)}
    t = G.table
    invs = G.inverses
    rows = []
    defect = None
    for coset in quot.cosets:
        row = []
        for a in A.members:
            img = a.image
            values = {t[invs[x]][img[x]] for x in coset}
            if len(values) != 1 and defect is None:
                defect = (
                    f"coset {coset} maps to {sorted(values)} under {a.cycle_notation()}"
                )
            v = t[invs[coset[0]]][img[coset[0]]]
            if v not in k_pos:
                raise InvariantError("an autocommutator left the autocommutator subgroup")
            row.append(k_pos[v])
        rows.append(tuple(row))
    return PairedGroups(
        group=G,
        subgroup=H,
        auts=A,
        autocentre=core,
        commutator=ksub,
        quotient=quot,
        commutator_group=k_group,
        commutator_embedding=k_embed,
        pairing=tuple(rows),
        pairing_defect=defect,
    )


def autocommutator_pairing(P: PairedGroups, coset_index: int, alpha: Automorphism) -> int:
    """The pairing value [x, alpha] for coset ``coset_index``, as a parent index.

    Uses the canonical (smallest) representative, after checking that every
    representative of the coset gives the same value.
    """
    if not 0 <= coset_index < len(P.quotient.cosets):
        raise PreconditionError(f"no coset {coset_index} in a quotient of order {len(P.quotient.cosets)}")
    coset = P.quotient.cosets[coset_index]
    t = P.group.table
    invs = P.group.inverses
    img = alpha.image
    values = {t[invs[x]][img[x]] for x in coset}
    if len(values) != 1:
        raise PairingUndefinedError(
            f"coset {coset} maps to {sorted(values)} under {alpha.cycle_notation()}"
        )
    return t[invs[coset[0]]][img[coset[0]]]


@dataclass(frozen=True)
class IsoclinismWitness:
    """The triple of isomorphisms making the pairing diagram commute."""

    psi: GroupHom    # quotient of pair 1 -> quotient of pair 2
    gamma: GroupHom  # automorphism group 1 -> 2, as abstract groups
    beta: GroupHom   # autocommutator subgroup 1 -> 2, as standalone groups


def _complete_multiplicative(
    g1: GroupTable, g2: GroupTable, partial: dict[int, int], used: set[int]
) -> Optional[tuple[int, ...]]:
    """Close a partial bijection under products; None on any conflict.

    Every ordered pair of known elements is combined exactly once, which
    simultaneously extends the map over the generated subgroup and checks
    the homomorphism property on it.
    """
    t1, t2 = g1.table, g2.table
    partial = dict(partial)
    used = set(used)
    queue = list(partial)
    i = 0
    while i < len(queue):
        x = queue[i]
        fx = partial[x]
        for j in range(i + 1):
            w = queue[j]
            fw = partial[w]
            for a, b, fa, fb in ((x, w, fx, fw), (w, x, fw, fx)):
                ab = t1[a][b]
                fab = t2[fa][fb]
                cur = partial.get(ab)
                if cur is None:
                    if fab in used:
                        return None
                    partial[ab] = fab
                    used.add(fab)
                    queue.append(ab)
                elif cur != fab:
                    return None
        i += 1
    if len(partial) != g1.order or len(used) != g2.order:
        return None
    return tuple(partial[x] for x in range(g1.order))


def _derive_beta(
    P1: PairedGroups, P2: PairedGroups, psi_img: tuple[int, ...], gamma_img: tuple[int, ...]
) -> Optional[tuple[int, ...]]:
    """The only beta that can close the diagram for (psi, gamma), or None.

    The diagram forces beta on every pairing value; those values generate
    the autocommutator subgroup, so multiplicative closure either pins the
    full isomorphism or exposes a conflict.
    """
    partial: dict[int, int] = {}
    used: set[int] = set()
    for c, prow1 in enumerate(P1.pairing):
        prow2 = P2.pairing[psi_img[c]]
        for a, x in enumerate(prow1):
            y = prow2[gamma_img[a]]
            cur = partial.get(x)
            if cur is None:
                if y in used:
                    return None
                partial[x] = y
                used.add(y)
            elif cur != y:
                return None
    return _complete_multiplicative(P1.commutator_group, P2.commutator_group, partial, used)


def find_autoisoclinism(
    P1: PairedGroups,
    P2: PairedGroups,
    aut_cap: int = 48,
    quotient_cap: int = 16,
    fast_reject: bool = True,
) -> Optional[IsoclinismWitness]:
    """Search for an autoisoclinism witness; None after exhausting the space.

    Deterministic: gamma candidates (between the automorphism groups as
    abstract groups) and psi candidates (between the quotients) are
    enumerated in lexicographic generator-image order and the first triple
    whose derived beta closes the diagram wins. ``fast_reject`` skips the
    search when the quotient, automorphism group or commutator sizes
    differ; disabling it is only useful for validating the rejections.
    """
    for P, which in ((P1, "first"), (P2, "second")):
        if P.pairing_defect is not None:
            raise PairingUndefinedError(f"{which} pair: {P.pairing_defect}")
        if P.auts.size > aut_cap:
            raise SizeCapError(
                f"automorphism group of the {which} pair has order {P.auts.size}, "
                f"over the witness-search cap {aut_cap}"
            )
        if P.quotient.group.order > quotient_cap:
            raise SizeCapError(
                f"quotient of the {which} pair has order {P.quotient.group.order}, "
                f"over the witness-search cap {quotient_cap}"
            )
    if fast_reject:
        if (
            P1.quotient.group.order != P2.quotient.group.order
            or P1.auts.size != P2.auts.size
            or P1.commutator.size != P2.commutator.size
        ):
            return None
    psis = tuple(iter_isomorphisms(P1.quotient.group, P2.quotient.group))
    if not psis:
        return None
    for gamma in iter_isomorphisms(P1.auts.abstract_group, P2.auts.abstract_group):
        for psi in psis:
            beta = _derive_beta(P1, P2, psi.image, gamma.image)
            if beta is not None:
                return IsoclinismWitness(
                    psi=psi,
                    gamma=gamma,
                    beta=GroupHom(P1.commutator_group, P2.commutator_group, beta),
                )
    return None


def _iso_defect(label: str, hom: GroupHom) -> Optional[str]:
    if len(hom.image) != hom.source.order:
        return f"{label}: image length {len(hom.image)} != source order {hom.source.order}"
    if sorted(hom.image) != list(range(hom.target.order)):
        return f"{label}: not a bijection onto the target"
    s, t = hom.source.table, hom.target.table
    img = hom.image
    for a in hom.source.elements():
        for b in hom.source.elements():
            if img[s[a][b]] != t[img[a]][img[b]]:
                return f"{label}: not a homomorphism at ({a}, {b})"
    return None


def verify_witness(
    P1: PairedGroups, P2: PairedGroups, witness: IsoclinismWitness
) -> tuple[bool, Optional[str]]:
    """Re-check a witness from scratch, independent of the search path.

    Verifies that each of psi, gamma, beta is a bijective homomorphism and
    that the square commutes on every (coset, automorphism) input, with
    the pairing values recomputed directly from the definitions. Returns
    (ok, counterexample-or-None).
    """
    for label, hom, src, dst in (
        ("psi", witness.psi, P1.quotient.group, P2.quotient.group),
        ("gamma", witness.gamma, P1.auts.abstract_group, P2.auts.abstract_group),
        ("beta", witness.beta, P1.commutator_group, P2.commutator_group),
    ):
        if hom.source.table != src.table or hom.target.table != dst.table:
            return False, f"{label}: maps the wrong groups"
        defect = _iso_defect(label, hom)
        if defect is not None:
            return False, defect
    for c in range(len(P1.quotient.cosets)):
        for a, alpha in enumerate(P1.auts.members):
            v1 = autocommutator_pairing(P1, c, alpha)
            lhs = witness.beta.image[P1.commutator_position[v1]]
            c2 = witness.psi.image[c]
            alpha2 = P2.auts.members[witness.gamma.image[a]]
            v2 = autocommutator_pairing(P2, c2, alpha2)
            rhs = P2.commutator_position[v2]
            if lhs != rhs:
                return False, (
                    f"diagram fails at coset {c}, automorphism {alpha.cycle_notation()}"
                )
    return True, None


def invert_witness(witness: IsoclinismWitness) -> IsoclinismWitness:
    """The reverse witness, for the symmetry of the relation."""
    return IsoclinismWitness(
        psi=witness.psi.inverse(),
        gamma=witness.gamma.inverse(),
        beta=witness.beta.inverse(),
    )


def check_equal_degree(
    P1: PairedGroups, P2: PairedGroups, witness: IsoclinismWitness
) -> BoundCheck:
    """Autoisoclinic pairs must have exactly equal degrees."""
    ok, why = verify_witness(P1, P2, witness)
    if not ok:
        raise PreconditionError(f"witness does not verify: {why}")
    d1 = pr_definition(P1.subgroup, P1.auts)
    d2 = pr_definition(P2.subgroup, P2.auts)
    return BoundCheck(
        name="isoclinic_equal_degree",
        value=d1,
        bound=d2,
        direction="equal",
        holds=d1 == d2,
        is_equality=d1 == d2,
        hypothesis_met=True,
    )
