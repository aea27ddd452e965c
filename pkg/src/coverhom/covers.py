"""Finite covers from group quotients, their first homology with deck
action, elevation classes, and the isotypic-projection certificate.

A finite quotient theta of a free or surface group yields a cover: one
vertex per element of the image (discovered by closure from the
identity), a directed edge (v, i) from v to v * theta(gen_i) per
generator, and, in the surface case, one 2-cell per vertex whose boundary
walks the relator from that vertex.  The deck group acts by left
multiplication, which commutes with the right-multiplication edges.

Homology is computed in the fundamental-cycle coordinates of a BFS
spanning tree: a cycle is determined by its coefficients on the non-tree
edges, and in the surface case classes are taken modulo the rows of the
2-cell boundary map.  Ranks over the rationals are computed modulo two
independent 31-bit primes with agreement required and an exact Fraction
elimination as the fallback.

The subspace certificate: for a cover built from a witness bundle, the
averaging operator pi = (1/|C|) sum_c omega^(-psi(c)) deck(c) over the
central slice C kills the elevation class of every d-primitive word (the
class is fixed by a deck element whose power lands in C off ker psi, and
omega^psi(c) != 1 forces the projection to zero) while pi is nonzero on
H_1, which contains the regular representation.  Cyclotomic arithmetic is
exact, in the power basis of Z[omega] modulo the d-th cyclotomic
polynomial.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebra import AlgElement
from .errors import InvalidConfig, PropertyViolation, TooLarge
from .units import in_central_subgroup
from .witness import (
    Alphabet,
    GroupWord,
    WitnessBundle,
    generator_word,
    reduced_words,
    surface_relator,
)

# ---------------------------------------------------------------------------
# generator images


class PermImage:
    """Permutation of {0..deg-1}; composition acts left-to-right on points."""

    __slots__ = ("map",)

    def __init__(self, mapping):
        mapping = tuple(mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise InvalidConfig(f"not a permutation: {mapping}")
        self.map = mapping

    def mul(self, other):
        return PermImage(tuple(self.map[j] for j in other.map))

    def inverse(self):
        inv = [0] * len(self.map)
        for i, j in enumerate(self.map):
            inv[j] = i
        return PermImage(tuple(inv))

    def identity_like(self):
        return PermImage(tuple(range(len(self.map))))

    def key(self):
        return self.map


class ResidueImage:
    """Element of (Z/m)^t written multiplicatively."""

    __slots__ = ("vec", "mod")

    def __init__(self, vec, mod):
        if mod < 2:
            raise InvalidConfig(f"modulus {mod} too small")
        self.vec = tuple(v % mod for v in vec)
        self.mod = mod

    def mul(self, other):
        return ResidueImage(
            tuple(a + b for a, b in zip(self.vec, other.vec)), self.mod
        )

    def inverse(self):
        return ResidueImage(tuple(-a for a in self.vec), self.mod)

    def identity_like(self):
        return ResidueImage((0,) * len(self.vec), self.mod)

    def key(self):
        return self.vec


class UnitImage:
    """Unit of a truncated algebra, hashed by its canonical term list."""

    __slots__ = ("elem",)

    def __init__(self, elem: AlgElement):
        if elem.augmentation() != 1:
            raise InvalidConfig("cover images must be units with constant term 1")
        self.elem = elem

    def mul(self, other):
        return UnitImage(self.elem * other.elem)

    def inverse(self):
        return UnitImage(self.elem.inverse_unit())

    def identity_like(self):
        return UnitImage(AlgElement.one(self.elem.spec))

    def key(self):
        return self.elem.canonical_key()


class ProductImage:
    """Tuple of images multiplied componentwise."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(parts)

    def mul(self, other):
        return ProductImage(tuple(a.mul(b) for a, b in zip(self.parts, other.parts)))

    def inverse(self):
        return ProductImage(tuple(p.inverse() for p in self.parts))

    def identity_like(self):
        return ProductImage(tuple(p.identity_like() for p in self.parts))

    def key(self):
        return tuple(p.key() for p in self.parts)


@dataclass
class FiniteQuotient:
    """Generator images in a concrete finite group; the group itself is
    discovered by closure.  Surface quotients must kill the relator."""

    alphabet: Alphabet
    images: tuple

    def __post_init__(self):
        self.images = tuple(self.images)
        if len(self.images) != self.alphabet.ngens:
            raise InvalidConfig(
                f"need {self.alphabet.ngens} generator images, got {len(self.images)}"
            )
        self._invs = tuple(img.inverse() for img in self.images)
        self.identity = self.images[0].identity_like()
        if self.alphabet.kind == "surface":
            rel = self.evaluate(surface_relator(self.alphabet.rank))
            if rel.key() != self.identity.key():
                raise InvalidConfig("generator images do not kill the surface relator")

    def evaluate(self, word: GroupWord):
        acc = self.identity
        for letter in word.letters:
            acc = acc.mul(
                self.images[letter - 1] if letter > 0 else self._invs[-letter - 1]
            )
        return acc

    def element_order(self, img, guard=10 ** 6) -> int:
        ident = self.identity.key()
        acc = img
        m = 1
        while acc.key() != ident:
            acc = acc.mul(img)
            m += 1
            if m > guard:
                raise TooLarge(f"element order exceeds guard {guard}")
        return m


def quotient_from_bundle(bundle: WitnessBundle) -> FiniteQuotient:
    """The quotient rho: generators map to the tuple of factor images."""
    imgs = []
    for i in range(bundle.alphabet.ngens):
        word = generator_word(bundle.alphabet, i)
        parts = [
            UnitImage(g) for comp in bundle.images(word) for g in comp
        ]
        imgs.append(parts[0] if len(parts) == 1 else ProductImage(parts))
    return FiniteQuotient(bundle.alphabet, tuple(imgs))


def quotient_from_json(data) -> FiniteQuotient:
    """Quotient description: {"domain": "free"|"surface", "rank"|"genus": g,
    "type": "perm"|"residue"|"unit", "images": ...}; see the README for
    examples of each image encoding."""
    kind = data["domain"]
    rank = data["rank"] if kind == "free" else data["genus"]
    alphabet = Alphabet(kind, rank)
    itype = data["type"]
    if itype == "perm":
        images = [PermImage(p) for p in data["images"]]
    elif itype == "residue":
        mod = data["mod"]
        images = [ResidueImage(v, mod) for v in data["images"]]
    elif itype == "unit":
        from .algebra import AlgebraSpec

        a = data["algebra"]
        spec = AlgebraSpec(a["kind"], a["r"], a["k"], a["ngens"])
        images = [UnitImage(AlgElement.from_dict(spec, e)) for e in data["images"]]
    else:
        raise InvalidConfig(f"unknown image type {itype!r}")
    return FiniteQuotient(alphabet, tuple(images))


# ---------------------------------------------------------------------------
# the cover complex


@dataclass
class CoverComplex:
    """Vertices, edges, spanning tree and (surface) 2-cells of the cover
    attached to a finite quotient.  Edge (v, i) has id v * ngens + i."""

    quotient: FiniteQuotient
    elements: list
    index: dict
    targets: np.ndarray
    inv_targets: np.ndarray
    tree_parent: list
    nontree: list
    nontree_pos: dict
    _left_perms: list = field(default=None, repr=False)
    _boundary_rows: list = field(default=None, repr=False)
    _dim_h1: int = field(default=None, repr=False)

    @property
    def alphabet(self):
        return self.quotient.alphabet

    @property
    def n_vertices(self):
        return len(self.elements)

    @property
    def ngens(self):
        return self.alphabet.ngens

    @property
    def n_edges(self):
        return self.n_vertices * self.ngens

    @property
    def n_faces(self):
        return self.n_vertices if self.alphabet.kind == "surface" else 0

    @property
    def cycle_rank(self):
        return self.n_edges - self.n_vertices + 1

    def euler_characteristic(self):
        return self.n_vertices - self.n_edges + self.n_faces

    # -- paths and cycles ------------------------------------------------

    def tree_path_vec(self, v: int) -> dict:
        """Edge vector of the tree path from the root to vertex v."""
        vec = {}
        while v:
            u, i = self.tree_parent[v]
            eid = u * self.ngens + i
            vec[eid] = vec.get(eid, 0) + 1
            v = u
        return vec

    def fundamental_cycle(self, pos: int) -> dict:
        """Cycle vector of the pos-th non-tree edge: tree path to its tail,
        the edge itself, then the tree path back from its head."""
        v, i = self.nontree[pos]
        vec = self.tree_path_vec(v)
        eid = v * self.ngens + i
        vec[eid] = vec.get(eid, 0) + 1
        w = int(self.targets[v, i])
        for e, c in self.tree_path_vec(w).items():
            s = vec.get(e, 0) - c
            if s:
                vec[e] = s
            else:
                vec.pop(e, None)
        return vec

    def walk_vec(self, word: GroupWord, basepoint: int = 0, repeats: int = 1):
        """Edge vector of the lift of word^repeats starting at basepoint;
        returns (end_vertex, vector)."""
        vec = {}
        v = basepoint
        for _ in range(repeats):
            for letter in word.letters:
                i = abs(letter) - 1
                if letter > 0:
                    eid = v * self.ngens + i
                    vec[eid] = vec.get(eid, 0) + 1
                    v = int(self.targets[v, i])
                else:
                    v = int(self.inv_targets[v, i])
                    eid = v * self.ngens + i
                    vec[eid] = vec.get(eid, 0) - 1
        return v, {e: c for e, c in vec.items() if c}

    def restrict_to_cycles(self, vec: dict) -> dict:
        """Coordinates of a cycle in the fundamental-cycle basis: its
        coefficients on the non-tree edges."""
        out = {}
        for eid, c in vec.items():
            pos = self.nontree_pos.get(eid)
            if pos is not None and c:
                out[pos] = c
        return out

    # -- deck action -------------------------------------------------------

    def left_perms(self):
        """Vertex permutations of left multiplication by each generator."""
        if self._left_perms is None:
            perms = []
            for img in self.quotient.images:
                perm = np.empty(self.n_vertices, dtype=np.int64)
                for v, elem in enumerate(self.elements):
                    perm[v] = self.index[img.mul(elem).key()]
                perms.append(perm)
            self._left_perms = perms
        return self._left_perms

    def tree_word(self, v: int):
        path = []
        while v:
            u, i = self.tree_parent[v]
            path.append(i)
            v = u
        path.reverse()
        return path

    def deck_perm(self, v: int) -> np.ndarray:
        """Permutation of vertices given by left multiplication with the
        group element of vertex v, composed from the generator perms along
        v's tree word."""
        lp = self.left_perms()
        perm = np.arange(self.n_vertices, dtype=np.int64)
        for i in reversed(self.tree_word(v)):
            perm = lp[i][perm]
        return perm

    def deck_translate(self, perm: np.ndarray, vec: dict) -> dict:
        g = self.ngens
        return {int(perm[eid // g]) * g + eid % g: c for eid, c in vec.items()}

    # -- homology ----------------------------------------------------------

    def boundary_rows(self):
        """2-cell boundaries in fundamental-cycle coordinates."""
        if self.alphabet.kind != "surface":
            return []
        if self._boundary_rows is None:
            relator = surface_relator(self.alphabet.rank)
            rows = []
            for v in range(self.n_vertices):
                end, vec = self.walk_vec(relator, basepoint=v)
                if end != v:
                    raise PropertyViolation(f"relator walk from {v} is not closed")
                rows.append(self.restrict_to_cycles(vec))
            self._boundary_rows = rows
        return self._boundary_rows

    def dim_h1(self, seed: int = 0) -> int:
        if self._dim_h1 is None:
            if self.alphabet.kind == "free":
                self._dim_h1 = self.cycle_rank
            else:
                rk = rank_over_rationals(self.boundary_rows(), self.cycle_rank, seed)
                self._dim_h1 = self.cycle_rank - rk
        return self._dim_h1


def build_cover(quotient: FiniteQuotient, guard_vertices: int = 10 ** 5) -> CoverComplex:
    """Closure BFS from the identity; the discovery edges form the
    spanning tree.  Deterministic: vertices in BFS order, generators in
    index order."""
    identity = quotient.identity
    elements = [identity]
    index = {identity.key(): 0}
    tree_parent = [None]
    targets_rows = []
    queue = [0]
    ptr = 0
    while ptr < len(queue):
        v = queue[ptr]
        ptr += 1
        elem = elements[v]
        row = []
        for i, img in enumerate(quotient.images):
            nxt = elem.mul(img)
            key = nxt.key()
            w = index.get(key)
            if w is None:
                w = len(elements)
                if w >= guard_vertices:
                    raise TooLarge(
                        f"cover exceeds the vertex guard {guard_vertices}"
                    )
                index[key] = w
                elements.append(nxt)
                tree_parent.append((v, i))
                queue.append(w)
            row.append(w)
        targets_rows.append(row)
    # BFS appends vertices while scanning, so targets_rows is already full
    targets = np.array(targets_rows, dtype=np.int64)
    ngens = quotient.alphabet.ngens
    inv_targets = np.empty_like(targets)
    for i in range(ngens):
        inv_targets[targets[:, i], i] = np.arange(len(elements))
    nontree = []
    tree_edges = {
        (u, i) for parent in tree_parent if parent for (u, i) in [parent]
    }
    for v in range(len(elements)):
        for i in range(ngens):
            if (v, i) not in tree_edges:
                nontree.append((v, i))
    nontree_pos = {v * ngens + i: pos for pos, (v, i) in enumerate(nontree)}
    return CoverComplex(
        quotient,
        elements,
        index,
        targets,
        inv_targets,
        tree_parent,
        nontree,
        nontree_pos,
    )


# ---------------------------------------------------------------------------
# exact rank


@lru_cache(maxsize=1)
def _rank_primes():
    out = []
    n = 2 ** 31 - 1
    while len(out) < 16:
        f, isp = 3, n % 2 == 1
        while isp and f * f <= n:
            if n % f == 0:
                isp = False
            f += 2
        if isp:
            out.append(n)
        n -= 2
    return tuple(out)


def _rank_mod_p(rows, ncols, p):
    if not rows:
        return 0
    mat = np.zeros((len(rows), ncols), dtype=np.int64)
    for t, row in enumerate(rows):
        for j, c in row.items():
            mat[t, j] = c % p
    m = len(rows)
    r = 0
    for col in range(ncols):
        if r == m:
            break
        nz = np.nonzero(mat[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        inv = pow(int(mat[r, col]), -1, p)
        mat[r] = mat[r] * inv % p
        below = mat[r + 1 :, col]
        hit = np.nonzero(below)[0]
        if hit.size:
            mat[r + 1 + hit] = (
                mat[r + 1 + hit] - below[hit, None] * mat[r][None, :]
            ) % p
        r += 1
    return r


def _rank_exact(rows, ncols):
    mat = [
        [Fraction(row.get(j, 0)) for j in range(ncols)] for row in rows
    ]
    r = 0
    for col in range(ncols):
        if r == len(mat):
            break
        piv = next((t for t in range(r, len(mat)) if mat[t][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for t in range(r + 1, len(mat)):
            f = mat[t][col]
            if f:
                mat[t] = [a - f * b for a, b in zip(mat[t], mat[r])]
        r += 1
    return r


def rank_over_rationals(rows, ncols, seed: int = 0) -> int:
    """Rank of integer rows (sparse dicts) over Q: two independent random
    31-bit primes must agree, otherwise exact Fraction elimination."""
    rows = [row for row in rows if row]
    if not rows or ncols == 0:
        return 0
    import random

    pool = _rank_primes()
    rng = random.Random(seed)
    p1, p2 = rng.sample(pool, 2)
    r1 = _rank_mod_p(rows, ncols, p1)
    r2 = _rank_mod_p(rows, ncols, p2)
    if r1 == r2:
        return r1
    return _rank_exact(rows, ncols)


def in_row_span(rows, vec, ncols, seed: int = 0) -> bool:
    base = rank_over_rationals(rows, ncols, seed)
    return rank_over_rationals(list(rows) + [vec], ncols, seed) == base


# ---------------------------------------------------------------------------
# structure checks


def gaschutz_check(cover: CoverComplex, seed: int = 0) -> dict:
    """dim H_1 = 1 + (n-1)|Q| for free covers, 2 + (2g-2)|Q| for surface
    covers; plus multiplicativity of the Euler characteristic."""
    V = cover.n_vertices
    alphabet = cover.alphabet
    dim = cover.dim_h1(seed)
    if alphabet.kind == "free":
        expect = 1 + (alphabet.rank - 1) * V
        chi_base = 1 - alphabet.rank
    else:
        expect = 2 + (2 * alphabet.rank - 2) * V
        chi_base = 2 - 2 * alphabet.rank
    if dim != expect:
        raise PropertyViolation(
            f"dim H1 = {dim} but the module formula gives {expect} at |Q| = {V}"
        )
    if cover.euler_characteristic() != V * chi_base:
        raise PropertyViolation(
            f"Euler characteristic {cover.euler_characteristic()} != {V} * {chi_base}"
        )
    return {
        "name": "gaschutz",
        "status": "pass",
        "details": {
            "group_order": V,
            "dim_h1": dim,
            "edges": cover.n_edges,
            "faces": cover.n_faces,
        },
    }


def elevation_class(cover: CoverComplex, word: GroupWord, basepoint: int = 0):
    """(m, edge vector) with m the order of theta(word) and the vector the
    lift of word^m starting at the basepoint."""
    img = cover.quotient.evaluate(word)
    m = cover.quotient.element_order(img, guard=cover.n_vertices + 1)
    end, vec = cover.walk_vec(word, basepoint, repeats=m)
    if end != basepoint:
        raise PropertyViolation(f"lift of {word.render()}^{m} did not close up")
    return m, vec


def d_primitive_predicate(d: int):
    return lambda word: any(v % d for v in word.exponent_vector())


def nonkernel_predicate(theta: FiniteQuotient):
    ident = theta.identity.key()
    return lambda word: theta.evaluate(word).key() != ident


def orbit_span_rank(
    cover: CoverComplex,
    predicate,
    max_len: int,
    basepoints=None,
    seed: int = 0,
):
    """Rank of the span of the elevation classes of every freely reduced
    word of length <= max_len passing the predicate, over all basepoints
    (pass an explicit iterable of vertices to subsample large covers).
    Surface case: rank in H_1, i.e. modulo the 2-cell boundaries."""
    if basepoints is None:
        basepoints = range(cover.n_vertices)
    rows = []
    seen = set()
    for word in reduced_words(cover.alphabet, max_len):
        if not predicate(word):
            continue
        for b in basepoints:
            _, vec = elevation_class(cover, word, b)
            row = cover.restrict_to_cycles(vec)
            key = tuple(sorted(row.items()))
            if row and key not in seen:
                seen.add(key)
                rows.append(row)
    dim = cover.dim_h1(seed)
    boundaries = cover.boundary_rows()
    if boundaries:
        base = rank_over_rationals(boundaries, cover.cycle_rank, seed)
        total = rank_over_rationals(boundaries + rows, cover.cycle_rank, seed)
        rank = total - base
    else:
        rank = rank_over_rationals(rows, cover.cycle_rank, seed)
    return rank, dim


# ---------------------------------------------------------------------------
# cyclotomic arithmetic (power basis of Z[omega] mod Phi_d)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int):
    """Coefficients (low to high, monic) of the d-th cyclotomic polynomial."""
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(e))
    return tuple(poly)


def _poly_div_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        c = num[shift + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[shift] = q
        if q:
            for i, dc in enumerate(den):
                num[shift + i] -= q * dc
    assert not any(num)
    return out


@lru_cache(maxsize=None)
def omega_powers(d: int):
    """Power-basis representations of omega^t, t in 0..d-1."""
    phi = cyclotomic_polynomial(d)
    deg = len(phi) - 1
    reps = []
    rep = [0] * deg
    rep[0] = 1
    for _ in range(d):
        reps.append(tuple(rep))
        rep = [0] + rep
        lead = rep.pop()
        if lead:
            for i in range(deg):
                rep[i] -= lead * phi[i]
    return tuple(reps)


def _cyc_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _cyc_scale(a, c):
    return tuple(x * c for x in a)


def _cyc_mul_omega_power(val, t, d):
    """val * omega^t for val in the power basis."""
    powers = omega_powers(d)
    deg = len(powers[0])
    out = (0,) * deg
    for i, c in enumerate(val):
        if c:
            out = _cyc_add(out, _cyc_scale(powers[(t + i) % d], c))
    return out


# ---------------------------------------------------------------------------
# isotypic projection


class IsotypicProjector:
    """The operator sum_c omega^(-psi(c)) deck(c) over the central slice of
    a cover built from a witness bundle (the 1/|C| normalisation is
    irrelevant for kernel and image questions and is kept out to stay in
    Z[omega])."""

    def __init__(self, cover: CoverComplex, bundle: WitnessBundle):
        self.cover = cover
        self.bundle = bundle
        self.d = bundle.modulus
        self.shape = [len(comp.factors) for comp in bundle.components]
        central = []
        for v, elem in enumerate(cover.elements):
            parts = self._parts(elem)
            if all(in_central_subgroup(g) for g in parts):
                central.append(v)
        self.central_vertices = central
        self.psi_values = [
            self._psi(self._parts(cover.elements[v])) for v in central
        ]
        self.central_perms = [cover.deck_perm(v) for v in central]
        self.deg = len(omega_powers(self.d)[0])

    def _parts(self, elem):
        flat = elem.parts if isinstance(elem, ProductImage) else (elem,)
        return tuple(p.elem for p in flat)

    def _psi(self, parts):
        nested = []
        at = 0
        for width in self.shape:
            nested.append(tuple(parts[at : at + width]))
            at += width
        return self.bundle.psi_of_centrals(tuple(nested))

    @property
    def central_order(self):
        return len(self.central_vertices)

    def apply_int(self, vec: dict) -> dict:
        """Apply to an integer edge vector; entries land in Z[omega]."""
        d, g = self.d, self.cover.ngens
        powers = omega_powers(d)
        zero = (0,) * self.deg
        out = {}
        for perm, t in zip(self.central_perms, self.psi_values):
            w = powers[(-t) % d]
            for eid, c in vec.items():
                nid = int(perm[eid // g]) * g + eid % g
                out[nid] = _cyc_add(out.get(nid, zero), _cyc_scale(w, c))
        return {e: v for e, v in out.items() if any(v)}

    def apply_cyc(self, vec: dict) -> dict:
        d, g = self.d, self.cover.ngens
        zero = (0,) * self.deg
        out = {}
        for perm, t in zip(self.central_perms, self.psi_values):
            for eid, val in vec.items():
                nid = int(perm[eid // g]) * g + eid % g
                out[nid] = _cyc_add(
                    out.get(nid, zero), _cyc_mul_omega_power(val, (-t) % d, d)
                )
        return {e: v for e, v in out.items() if any(v)}

    def is_zero_in_h1(self, cyc_vec: dict, seed: int = 0) -> bool:
        """Zero test for a Z[omega]-valued cycle, componentwise over Q."""
        if self.cover.alphabet.kind == "free":
            return not cyc_vec
        boundaries = self.cover.boundary_rows()
        for comp in range(self.deg):
            row = {}
            for eid, val in cyc_vec.items():
                pos = self.cover.nontree_pos.get(eid)
                if pos is not None and val[comp]:
                    row[pos] = val[comp]
            if row and not in_row_span(boundaries, row, self.cover.cycle_rank, seed):
                return False
        return True


def isotypic_projection_check(
    cover: CoverComplex,
    bundle: WitnessBundle,
    max_word_len: int = 6,
    basepoint_samples: int = 5,
    seed: int = 0,
) -> dict:
    """The subspace certificate for one cover.

    (a) the projector kills the elevation class of every d-primitive word
        of length <= max_word_len, at the identity basepoint and, by deck
        equivariance (separately spot-checked here on random basepoints),
        at every basepoint;
    (b) the projector is nonzero on H_1, witnessed by a fundamental cycle.

    Together these certify that the d-primitive classes span a proper
    subspace of H_1 of the cover.
    """
    import random

    rng = random.Random(seed)
    proj = IsotypicProjector(cover, bundle)
    d = bundle.modulus
    primitive = d_primitive_predicate(d)
    words_checked = 0
    spot_checks = 0
    for word in reduced_words(cover.alphabet, max_word_len):
        if not primitive(word):
            continue
        m, vec = elevation_class(cover, word, 0)
        image = proj.apply_int(vec)
        if not proj.is_zero_in_h1(image, seed):
            raise PropertyViolation(
                f"projection of the elevation of {word.render()} (m={m}) is nonzero",
                counterexample=word.render(),
            )
        words_checked += 1
        if basepoint_samples and rng.randrange(16) == 0:
            b = rng.randrange(cover.n_vertices)
            _, bvec = elevation_class(cover, word, b)
            # the basepoint-b elevation is the deck translate of the
            # identity one, so killing the identity class kills them all;
            # recheck both facts directly at this basepoint
            if bvec != cover.deck_translate(cover.deck_perm(b), vec):
                raise PropertyViolation(
                    f"elevation at basepoint {b} is not the deck translate "
                    f"for {word.render()}",
                    counterexample=(word.render(), b),
                )
            if not proj.is_zero_in_h1(proj.apply_int(bvec), seed):
                raise PropertyViolation(
                    f"projection nonzero at basepoint {b} for {word.render()}",
                    counterexample=(word.render(), b),
                )
            spot_checks += 1
    witness_pos = None
    for pos in range(len(cover.nontree)):
        image = proj.apply_int(cover.fundamental_cycle(pos))
        if not proj.is_zero_in_h1(image, seed):
            witness_pos = pos
            break
    if witness_pos is None:
        raise PropertyViolation(
            "projection vanished on every fundamental cycle; it cannot be "
            "zero on H_1, which contains the regular representation"
        )
    return {
        "name": "isotypic-projection",
        "status": "pass",
        "details": {
            "group_order": cover.n_vertices,
            "central_order": proj.central_order,
            "dim_h1": cover.dim_h1(seed),
            "words_annihilated": words_checked,
            "basepoint_spot_checks": spot_checks,
            "h1_witness_cycle": witness_pos,
            "modulus": d,
        },
    }


def isotypic_invariants(cover, bundle, samples: int = 5, seed: int = 0) -> dict:
    """Idempotence (S^2 = |C| S) and commutation with the deck action on
    random sparse integer vectors."""
    import random

    rng = random.Random(seed)
    proj = IsotypicProjector(cover, bundle)
    order = proj.central_order
    for _ in range(samples):
        vec = {
            rng.randrange(cover.n_edges): rng.randrange(1, 5)
            for _ in range(rng.randrange(1, 6))
        }
        once = proj.apply_int(vec)
        twice = proj.apply_cyc(once)
        scaled = {e: _cyc_scale(v, order) for e, v in once.items()}
        if twice != scaled:
            raise PropertyViolation("projector is not idempotent up to |C|")
        v = rng.randrange(cover.n_vertices)
        perm = cover.deck_perm(v)
        left = proj.apply_int(cover.deck_translate(perm, vec))
        right = {
            int(perm[eid // cover.ngens]) * cover.ngens + eid % cover.ngens: val
            for eid, val in once.items()
        }
        if left != right:
            raise PropertyViolation("projector does not commute with the deck action")
    return {"name": "isotypic-invariants", "status": "pass", "details": {"samples": samples}}


# ---------------------------------------------------------------------------
# random quotients for the dimension-formula checks


def random_quotient(alphabet: Alphabet, rng, max_size: int = 200) -> FiniteQuotient:
    """A random finite quotient with |image| <= max_size: permutation
    images for free groups; for surface groups either residue tuples or
    the pair pattern (a, b, b, a, c, c, ...) whose commutators cancel."""
    for _ in range(64):
        if alphabet.kind == "free":
            deg = rng.choice((3, 4, 5))
            images = tuple(
                PermImage(_random_perm(rng, deg)) for _ in range(alphabet.ngens)
            )
        elif rng.randrange(2):
            mod = rng.choice((2, 3, 4, 5, 6, 7))
            images = tuple(
                ResidueImage([rng.randrange(mod)], mod)
                for _ in range(alphabet.ngens)
            )
        else:
            deg = rng.choice((3, 4, 5))
            a, b = _random_perm(rng, deg), _random_perm(rng, deg)
            pairs = [(PermImage(a), PermImage(b)), (PermImage(b), PermImage(a))]
            while len(pairs) < alphabet.rank:
                c = PermImage(_random_perm(rng, deg))
                pairs.append((c, c))
            images = tuple(img for pair in pairs for img in pair)
        quotient = FiniteQuotient(alphabet, images)
        try:
            cover = build_cover(quotient, guard_vertices=max_size + 1)
        except TooLarge:
            continue
        if cover.n_vertices > 1:
            return quotient
    raise TooLarge(f"no random quotient of size <= {max_size} found")


def _random_perm(rng, deg):
    perm = list(range(deg))
    rng.shuffle(perm)
    return tuple(perm)
