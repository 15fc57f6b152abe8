"""Finite abstract simplicial complexes, given by their facet sets.

A face is a tuple of strictly increasing nonnegative vertex labels; the
empty face () is a face of every nonvoid complex and may itself be the
unique facet (the (-1)-dimensional complex, which shows up as the link
of a facet).  Complexes are immutable; every operation returns a new
value, so everything here is safe to share between threads.

Face membership is decided against the facet list on demand -- there is
no stored face lattice.  Per-dimension enumerations are cached on the
instance.
"""

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import (
    AbsentFaceError,
    BadEdgeOrderError,
    MalformedFaceError,
    RangeGuardError,
)


def as_face(vertices):
    """Canonicalize a vertex iterable into a sorted face tuple."""
    vs = tuple(sorted(int(v) for v in vertices))
    if any(v < 0 for v in vs):
        raise MalformedFaceError(f"negative vertex label in {vs}")
    if len(set(vs)) != len(vs):
        raise MalformedFaceError(f"repeated vertex in face {vs}")
    return vs


@dataclass(frozen=True)
class SimplicialComplex:
    facets: tuple
    _face_cache: dict = field(
        default_factory=dict, compare=False, hash=False, repr=False
    )

    @property
    def is_void(self):
        return not self.facets

    @property
    def dim(self):
        if self.is_void:
            raise RangeGuardError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self):
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def vertex_count(self):
        return len(self.vertices)

    def is_pure(self):
        return len({len(f) for f in self.facets}) <= 1

    def has_face(self, face):
        face = as_face(face)
        fs = frozenset(face)
        return any(fs.issubset(facet) for facet in self.facets)

    def faces(self, k, guard=None):
        """Frozenset of all k-dimensional faces (tuples of k+1 vertices)."""
        if k in self._face_cache:
            return self._face_cache[k]
        if guard is not None:
            estimate = sum(comb(len(f), k + 1) for f in self.facets)
            if estimate > guard:
                raise RangeGuardError(
                    f"face enumeration estimate {estimate} exceeds guard {guard}"
                )
        out = set()
        for facet in self.facets:
            out.update(combinations(facet, k + 1))
        out = frozenset(out)
        self._face_cache[k] = out
        return out

    def edges(self):
        return tuple(sorted(self.faces(1)))

    def all_faces(self, guard=None):
        """Every face including the empty one."""
        out = {()}
        for k in range(self.dim + 1):
            out.update(self.faces(k, guard=guard))
        return frozenset(out)

    def f_vector(self, guard=None):
        if self.is_void:
            raise RangeGuardError("the void complex has no f-vector")
        return tuple(len(self.faces(k, guard=guard)) for k in range(self.dim + 1))

    def face_count(self):
        """Total number of faces, the empty face included."""
        return 1 + sum(self.f_vector())

    def euler_characteristic(self):
        return sum((-1) ** i * fi for i, fi in enumerate(self.f_vector()))

    def to_json(self):
        return {"facets": [list(f) for f in self.facets]}

    def dumps_facets(self):
        """Canonical text form: one facet per line, lexicographic order."""
        return "\n".join(" ".join(str(v) for v in f) for f in self.facets) + "\n"

    def __repr__(self):
        return f"SimplicialComplex({len(self.facets)} facets, dim {self.dim if self.facets else '-'})"


def from_facets(facet_lists):
    """Build a complex, dropping faces dominated by a larger facet."""
    faces = sorted({as_face(f) for f in facet_lists}, key=len, reverse=True)
    kept = []
    for f in faces:
        fs = frozenset(f)
        if not any(fs.issubset(g) for g in kept):
            kept.append(f)
    return SimplicialComplex(tuple(sorted(kept)))


def link(K, face):
    """Subcomplex of faces G disjoint from `face` with G union face in K."""
    face = as_face(face)
    if not K.has_face(face):
        raise AbsentFaceError(f"face {face} is not in the complex")
    fs = frozenset(face)
    return from_facets(
        [tuple(v for v in facet if v not in fs) for facet in K.facets if fs.issubset(facet)]
    )


@dataclass(frozen=True)
class LinkConditionReport:
    per_edge: dict
    ok: bool

    def violations(self):
        return tuple(e for e, good in self.per_edge.items() if not good)


def check_link_condition(K):
    """For each edge {a,b}: is lk(a) intersect lk(b) equal to lk({a,b})?"""
    vertex_links = {}

    def faces_of_vertex_link(v):
        if v not in vertex_links:
            vertex_links[v] = link(K, (v,)).all_faces()
        return vertex_links[v]

    per_edge = {}
    for e in K.edges():
        a, b = e
        meet = faces_of_vertex_link(a) & faces_of_vertex_link(b)
        per_edge[e] = meet == link(K, e).all_faces()
    return LinkConditionReport(per_edge, all(per_edge.values()))


@dataclass(frozen=True)
class ContractionResult:
    complex: SimplicialComplex
    contracted_vertex: int
    removed_second_copies: int


def contract_edge(K, e):
    """Identify the endpoints of e, keeping the smaller label.

    Faces through the larger endpoint b are renamed b -> a; faces through
    both endpoints lose b.  Each face G of lk(e) produces the duplicate
    pair (G+a, G+b) collapsing to one image; `removed_second_copies`
    counts those pairs, i.e. the number of faces of lk(e) (empty face
    included).
    """
    e = as_face(e)
    if len(e) != 2 or not K.has_face(e):
        raise AbsentFaceError(f"{e} is not an edge of the complex")
    a, b = e
    duplicates = link(K, e).face_count()
    new_facets = [
        tuple(sorted({a if v == b else v for v in facet})) for facet in K.facets
    ]
    return ContractionResult(from_facets(new_facets), a, duplicates)


def stellar_subdivide_edge(K, e):
    """Stellar subdivision of an edge: a fresh vertex replaces the open star of e."""
    e = as_face(e)
    if len(e) != 2 or not K.has_face(e):
        raise AbsentFaceError(f"{e} is not an edge of the complex")
    a, b = e
    w = max(K.vertices) + 1
    out = []
    for facet in K.facets:
        if a in facet and b in facet:
            out.append(tuple(sorted([v for v in facet if v != a] + [w])))
            out.append(tuple(sorted([v for v in facet if v != b] + [w])))
        else:
            out.append(facet)
    return from_facets(out)


def tchebyshev_subdivision(K, edge_order=None):
    """Stellar subdivision of every ORIGINAL edge of K, once each.

    Edges created along the way are never subdivided.  The default order
    is lexicographic; any permutation of the original edge set yields the
    same f-vector.
    """
    original = K.edges()
    if not original:
        raise RangeGuardError("the complex has no edge to subdivide")
    if edge_order is None:
        edge_order = original
    else:
        edge_order = tuple(as_face(e) for e in edge_order)
        if sorted(edge_order) != list(original) or len(edge_order) != len(original):
            raise BadEdgeOrderError(
                "edge_order must be a permutation of the original edge set"
            )
    cur = K
    for e in edge_order:
        cur = stellar_subdivide_edge(cur, e)
    return cur


def cross_polytope_boundary(d):
    """Boundary of the d-dimensional cross polytope: 2d vertices, 2^d facets.

    Antipodal pairs are (2i, 2i+1); no face contains both members of a pair.
    """
    if d < 1:
        raise RangeGuardError("cross polytope boundary needs d >= 1")
    facets = []
    for signs in range(2**d):
        facets.append(tuple(2 * i + ((signs >> i) & 1) for i in range(d)))
    return from_facets(facets)


def simplex_boundary(d):
    """Boundary of the d-simplex on vertices 0..d."""
    if d < 1:
        raise RangeGuardError("simplex boundary needs d >= 1")
    return from_facets(combinations(range(d + 1), d))


def cycle(n):
    """The n-cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise RangeGuardError("a cycle needs n >= 3")
    return from_facets([(i, (i + 1) % n) for i in range(n)])


def generate(spec_string):
    """Parse 'cross:d', 'simplexboundary:d', or 'cycle:n'."""
    name, _, arg = spec_string.partition(":")
    if not arg:
        raise RangeGuardError(f"generator spec {spec_string!r} needs a parameter")
    value = int(arg)
    table = {
        "cross": cross_polytope_boundary,
        "simplexboundary": simplex_boundary,
        "cycle": cycle,
    }
    if name not in table:
        raise RangeGuardError(f"unknown generator {name!r}")
    return table[name](value)


def parse_facets_text(text):
    """Facet-list format: one facet per line, whitespace-separated, # comments."""
    facets = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        facets.append([int(tok) for tok in line.split()])
    return from_facets(facets)


def load_facets(path):
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_facets(json.loads(text)["facets"])
    return parse_facets_text(text)
