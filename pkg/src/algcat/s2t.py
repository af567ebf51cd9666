"""Sharply 2-transitive permutation groups and their derived neardomains.

A sharply 2-transitive group on n >= 2 points moves every ordered pair of
distinct points to every other by exactly one element, so |G| = n(n-1) and
an element is pinned down by its images on any two distinct points. Two base
points (omega0, omega1) play the roles of zero and one.

The derived structure rests on the involutions J (never empty here):

  characteristic   all involutions fixed-point-free -> TWO; all with exactly
                   one fixed point -> NOT_TWO; anything else is corrupt input
  translations     char two: J plus the identity; otherwise J composed with
                   the unique involution fixing omega0. A regular set either
                   way, validated as such.
  point_add        alpha + beta = a(beta), a the translation with
                   a(omega0) = alpha
  point_mul        alpha * beta = g(beta), g the omega0-stabilizer element
                   with g(omega1) = alpha; products with omega0 are omega0

derived_neardomain packages those tables and must re-validate; going the
other way, affine_group builds the maps x -> a + b*x of a neardomain, which
form a sharply 2-transitive group. One direction inverts the other on the
nose, the composite the other way around is matched back to the original
group by canonical_isomorphism (two-point interpolation). catcheck turns
each of these statements into an exhaustive check.

Hom-sets: morphisms are pairs (f, phi), f a group homomorphism and phi an
injective base-point-preserving point map intertwining the actions; between
groups of different characteristic the hom-set is empty by definition.
enumerate_s2t_morphisms routes through the derived neardomains, while
enumerate_s2t_morphisms_direct brute-forces point maps (kept as an
independent oracle for small degrees).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import (
    DegenerateOmega,
    DichotomyViolation,
    NotAGroup,
    NotSharplyTransitive,
    StructureError,
)
from .neardomain import Neardomain, check_neardomain, d_coeff, is_nd_morphism
from .perms import Perm, PermSet, perm_set, subgroup_failure
from .rps import Rps, check_rps


class Characteristic(enum.Enum):
    TWO = "2"
    NOT_TWO = "not 2"


@dataclass(frozen=True, slots=True)
class S2tGroup:
    """Validated sharply 2-transitive group; build through check_s2t()."""

    group: PermSet
    degree: int
    omega0: int
    omega1: int


@dataclass(frozen=True, slots=True)
class S2tMorphism:
    """f: index map over sorted source group members into the target's;
    phi: point map. Unchecked container; is_s2t_morphism validates."""

    f: tuple[int, ...]
    phi: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class AffineMap:
    """x -> a + b * x over a neardomain, with its permutation realization."""

    a: int
    b: int
    perm: Perm


def check_s2t(group: PermSet, omega0: int, omega1: int) -> S2tGroup:
    """Validate the group axioms and sharp 2-transitivity on ordered pairs."""
    n = group.degree
    if n < 2:
        raise DegenerateOmega("need at least 2 points")
    if not 0 <= omega0 < n or not 0 <= omega1 < n or omega0 == omega1:
        raise DegenerateOmega(f"base points ({omega0}, {omega1}) invalid for degree {n}")
    witness = subgroup_failure(group)
    if witness is not None:
        raise NotAGroup(witness)
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    for a1, a2 in pairs:
        seen: dict[tuple[int, int], int] = {}
        for g in group:
            key = (g(a1), g(a2))
            seen[key] = seen.get(key, 0) + 1
        for b1, b2 in pairs:
            c = seen.get((b1, b2), 0)
            if c != 1:
                raise NotSharplyTransitive((a1, a2), (b1, b2), c)
    return S2tGroup(group, n, omega0, omega1)


@lru_cache(maxsize=None)
def involutions(g: S2tGroup) -> PermSet:
    """All elements of order exactly two. Never empty in a valid group."""
    return perm_set(p for p in g.group if p.is_involution())


@lru_cache(maxsize=None)
def characteristic(g: S2tGroup) -> Characteristic:
    counts = {len(p.fixed_points()) for p in involutions(g)}
    if counts == {0}:
        return Characteristic.TWO
    if counts == {1}:
        return Characteristic.NOT_TWO
    raise DichotomyViolation(f"involution fixed-point counts {sorted(counts)}, expected all 0 or all 1")


def base_involution(g: S2tGroup) -> Perm:
    """The involution fixing omega0; only defined away from characteristic two.

    Uniqueness holds for every valid group, but it is re-verified per object
    here rather than assumed.
    """
    if characteristic(g) is Characteristic.TWO:
        raise ValueError("characteristic two groups have no involution with a fixed point")
    fixing = [p for p in involutions(g) if p(g.omega0) == g.omega0]
    if len(fixing) != 1:
        raise StructureError(f"expected exactly one involution fixing {g.omega0}, found {len(fixing)}")
    return fixing[0]


@lru_cache(maxsize=None)
def translations(g: S2tGroup) -> Rps:
    """The involution-derived regular set encoding addition, based at omega0.

    Characteristic two: the involutions plus the identity. Otherwise: every
    involution composed (on the right) with the base involution. check_rps
    must pass; failure would be corrupt input or an internal bug.
    """
    J = involutions(g)
    if characteristic(g) is Characteristic.TWO:
        members = perm_set([Perm.identity(g.degree), *J])
    else:
        nu = base_involution(g)
        members = perm_set(j * nu for j in J)
    return check_rps(members, g.degree, g.omega0)


@lru_cache(maxsize=None)
def _stabilizer_action(g: S2tGroup) -> dict[int, Perm]:
    """omega1-image -> element, over the stabilizer of omega0.

    Sharp 2-transitivity makes the stabilizer regular on the remaining
    points; asserted once per object.
    """
    stab = [p for p in g.group if p(g.omega0) == g.omega0]
    table = {p(g.omega1): p for p in stab}
    assert len(stab) == g.degree - 1 and len(table) == g.degree - 1
    assert g.omega0 not in table
    return table


def point_add(g: S2tGroup, alpha: int, beta: int) -> int:
    """alpha + beta via the translation sending omega0 to alpha."""
    return translations(g).from_point(alpha)(beta)


def point_mul(g: S2tGroup, alpha: int, beta: int) -> int:
    """alpha * beta via the omega0-stabilizer element sending omega1 to alpha;
    any product with omega0 is omega0."""
    if alpha == g.omega0 or beta == g.omega0:
        return g.omega0
    return _stabilizer_action(g)[alpha](beta)


@lru_cache(maxsize=None)
def derived_neardomain(g: S2tGroup) -> Neardomain:
    """The neardomain on the points, zero = omega0 and one = omega1.

    Revalidated through check_neardomain on every construction; this is the
    object part of the functor onto neardomains.
    """
    n = g.degree
    add = tuple(tuple(point_add(g, a, b) for b in range(n)) for a in range(n))
    mul = tuple(tuple(point_mul(g, a, b) for b in range(n)) for a in range(n))
    return check_neardomain(add, mul, g.omega0, g.omega1)


def is_s2t_morphism(m: S2tMorphism, src: S2tGroup, dst: S2tGroup) -> bool:
    """True iff characteristics match, f is a group homomorphism, and phi is
    an injective base-point-preserving map intertwining the actions.

    A true result is asserted to have injective f (forced by phi injective
    plus sharp transitivity; an assertion failure is an implementation bug).
    """
    f, phi = m.f, m.phi
    if len(f) != len(src.group) or any(not 0 <= v < len(dst.group) for v in f):
        raise ValueError("f is not a total map into the target group")
    if len(phi) != src.degree or any(not 0 <= v < dst.degree for v in phi):
        raise ValueError("phi is not a total map into the target points")
    if characteristic(src) is not characteristic(dst):
        return False
    if len(set(phi)) != len(phi):
        return False
    if phi[src.omega0] != dst.omega0 or phi[src.omega1] != dst.omega1:
        return False
    src_ms = src.group.members
    dst_ms = dst.group.members
    for i, p in enumerate(src_ms):
        q = dst_ms[f[i]]
        for x in range(src.degree):
            if phi[p(x)] != q(phi[x]):
                return False
    for i, p in enumerate(src_ms):
        for j, q in enumerate(src_ms):
            if dst_ms[f[src.group.index(p * q)]] != dst_ms[f[i]] * dst_ms[f[j]]:
                return False
    assert len(set(f)) == len(f), "morphisms of sharply 2-transitive groups have injective f"
    return True


def image_inclusion_witness(m: S2tMorphism, src: S2tGroup, dst: S2tGroup) -> str | None:
    """None when f maps involutions into involutions and translations into
    translations; otherwise a witness description. Expects a valid morphism."""
    dst_ms = dst.group.members
    inv_dst = involutions(dst)
    for p in involutions(src):
        q = dst_ms[m.f[src.group.index(p)]]
        if q not in inv_dst:
            return f"involution {list(p.images)} maps to non-involution {list(q.images)}"
    trans_dst = translations(dst).members
    for p in translations(src).members:
        q = dst_ms[m.f[src.group.index(p)]]
        if q not in trans_dst:
            return f"translation {list(p.images)} maps to non-translation {list(q.images)}"
    return None


def derived_nd_morphism(m: S2tMorphism, src: S2tGroup, dst: S2tGroup) -> tuple[int, ...]:
    """The point map of a valid morphism, re-checked as a neardomain morphism
    between the derived structures (an assertion failure here is a bug, the
    point map of a valid morphism always qualifies)."""
    phi = m.phi
    assert is_nd_morphism(phi, derived_neardomain(src), derived_neardomain(dst))
    return phi


@lru_cache(maxsize=None)
def affine_maps(nd: Neardomain) -> tuple[AffineMap, ...]:
    """All maps x -> a + b * x with b nonzero, ordered by (a, b)."""
    n = nd.order
    out = []
    for a in range(n):
        for b in range(n):
            if b == nd.zero:
                continue
            images = tuple(nd.add[a][nd.mul[b][x]] for x in range(n))
            out.append(AffineMap(a, b, Perm(images)))
    return tuple(out)


@lru_cache(maxsize=None)
def _affine_param_index(nd: Neardomain) -> dict[Perm, tuple[int, int]]:
    return {am.perm: (am.a, am.b) for am in affine_maps(nd)}


@lru_cache(maxsize=None)
def affine_group(nd: Neardomain) -> S2tGroup:
    """The affine maps as a sharply 2-transitive group on the carrier, based
    at (zero, one).

    Construction re-runs check_s2t, and the closed-form composition law

        (a, b) . (k, l) == (a + b*k, d * b * l),  d the reassociation
                                                  coefficient of (a, b*k)

    is asserted for every pair of maps.
    """
    maps = affine_maps(nd)
    assert len({am.perm for am in maps}) == len(maps)
    grp = check_s2t(perm_set(am.perm for am in maps), nd.zero, nd.one)
    by_param = {(am.a, am.b): am.perm for am in maps}
    for am1 in maps:
        for am2 in maps:
            a, b = am1.a, am1.b
            k, l = am2.a, am2.b
            d = d_coeff(nd, a, nd.mul[b][k])
            expected = by_param[(nd.add[a][nd.mul[b][k]], nd.mul[d][nd.mul[b][l]])]
            assert am1.perm * am2.perm == expected
    return grp


def lift_nd_morphism(phi: Sequence[int], src: Neardomain, dst: Neardomain) -> S2tMorphism:
    """The induced morphism between affine groups: the map with parameters
    (a, b) goes to the one with parameters (phi(a), phi(b)). This is the
    morphism part of the functor from neardomains."""
    phi = tuple(phi)
    if not is_nd_morphism(phi, src, dst):
        raise ValueError("phi is not a neardomain morphism")
    src_g = affine_group(src)
    dst_g = affine_group(dst)
    src_params = _affine_param_index(src)
    dst_by_param = {(am.a, am.b): am.perm for am in affine_maps(dst)}
    f = []
    for p in src_g.group:
        a, b = src_params[p]
        f.append(dst_g.group.index(dst_by_param[(phi[a], phi[b])]))
    return S2tMorphism(tuple(f), phi)


@lru_cache(maxsize=None)
def canonical_isomorphism(g: S2tGroup) -> S2tMorphism:
    """The isomorphism from the rebuilt group (affine maps of the derived
    neardomain) back onto g, solved by two-point interpolation: each rebuilt
    member is matched with the unique element of g agreeing with it on both
    base points. Validity, bijectivity, and invertibility are all verified
    before returning."""
    rebuilt = affine_group(derived_neardomain(g))
    pair_index = {(p(g.omega0), p(g.omega1)): i for i, p in enumerate(g.group.members)}
    for m in rebuilt.group:
        key = (m(g.omega0), m(g.omega1))
        if key not in pair_index:
            raise StructureError(f"rebuilt member {list(m.images)} matches no group element on the base points")
    f = tuple(pair_index[(m(g.omega0), m(g.omega1))] for m in rebuilt.group)
    if sorted(f) != list(range(len(f))):
        raise StructureError("two-point interpolation is not bijective")
    iso = S2tMorphism(f, tuple(range(g.degree)))
    if not is_s2t_morphism(iso, rebuilt, g):
        raise StructureError("interpolated map is not a morphism")
    inv_f = [0] * len(f)
    for i, v in enumerate(f):
        inv_f[v] = i
    inverse = S2tMorphism(tuple(inv_f), tuple(range(g.degree)))
    if not is_s2t_morphism(inverse, g, rebuilt):
        raise StructureError("interpolated map is not invertible as a morphism")
    return iso


def enumerate_s2t_morphisms(src: S2tGroup, dst: S2tGroup) -> tuple[S2tMorphism, ...]:
    """Hom-set via the derived neardomains (the production path): each
    neardomain morphism is lifted to the affine groups and conjugated back
    through the canonical isomorphisms. Mixed characteristics give the empty
    hom-set outright."""
    if characteristic(src) is not characteristic(dst):
        return ()
    nd_s, nd_d = derived_neardomain(src), derived_neardomain(dst)
    k_s, k_d = canonical_isomorphism(src), canonical_isomorphism(dst)
    k_s_inv = [0] * len(k_s.f)
    for i, v in enumerate(k_s.f):
        k_s_inv[v] = i
    from .neardomain import enumerate_nd_morphisms

    out = []
    for phi in enumerate_nd_morphisms(nd_s, nd_d):
        lifted = lift_nd_morphism(phi, nd_s, nd_d)
        f = tuple(k_d.f[lifted.f[k_s_inv[i]]] for i in range(len(src.group)))
        out.append(S2tMorphism(f, phi))
    return tuple(out)


def enumerate_s2t_morphisms_direct(src: S2tGroup, dst: S2tGroup) -> tuple[S2tMorphism, ...]:
    """Brute-force oracle: every injective base-point-preserving point map is
    tried; f is forced by two-point interpolation in the target (each f(p)
    must agree with phi . p on both base points), then the pair is verified
    in full. Independent of the derived-neardomain reduction; factorial in
    the degree, intended for degree <= 4."""
    n, m = src.degree, dst.degree
    others = [x for x in range(n) if x not in (src.omega0, src.omega1)]
    targets = [y for y in range(m) if y not in (dst.omega0, dst.omega1)]
    pair_index = {(q(dst.omega0), q(dst.omega1)): i for i, q in enumerate(dst.group.members)}
    out = []
    for choice in itertools.permutations(targets, len(others)):
        phi_l = [0] * n
        phi_l[src.omega0] = dst.omega0
        phi_l[src.omega1] = dst.omega1
        for pos, v in zip(others, choice):
            phi_l[pos] = v
        phi = tuple(phi_l)
        f = []
        for p in src.group:
            key = (phi[p(src.omega0)], phi[p(src.omega1)])
            idx = pair_index.get(key)
            if idx is None:
                break
            f.append(idx)
        else:
            cand = S2tMorphism(tuple(f), phi)
            if is_s2t_morphism(cand, src, dst):
                out.append(cand)
    return tuple(out)


def translations_form_subgroup(g: S2tGroup) -> bool:
    return subgroup_failure(translations(g).members) is None


def involution_products_form_subgroup(g: S2tGroup) -> bool:
    J = involutions(g)
    products = perm_set(p * q for p in J for q in J)
    return subgroup_failure(products) is None


def relabel(g: S2tGroup, pi: Perm) -> S2tGroup:
    """Conjugate the whole group by pi and move the base points along."""
    if pi.degree != g.degree:
        raise StructureError("relabeling degree mismatch")
    pi_inv = pi.inverse()
    members = perm_set(pi * p * pi_inv for p in g.group)
    return check_s2t(members, pi(g.omega0), pi(g.omega1))


def identity_s2t_morphism(g: S2tGroup) -> S2tMorphism:
    return S2tMorphism(tuple(range(len(g.group))), tuple(range(g.degree)))


def compose_s2t_morphisms(outer: S2tMorphism, inner: S2tMorphism) -> S2tMorphism:
    """Composite inner-then-outer, index maps juggled accordingly."""
    return S2tMorphism(
        tuple(outer.f[v] for v in inner.f),
        tuple(outer.phi[v] for v in inner.phi),
    )
