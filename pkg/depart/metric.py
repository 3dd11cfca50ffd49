import logging
from abc import ABC, abstractmethod
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .errors import ValidationError, UnsupportedOperationError
from .util.numeric_util import TOLERANCE

log = logging.getLogger(__name__)

Coordinates = Union[float, int, Sequence[float]]


class SpaceKind:
    """Possible kinds of the ambient metric space.

    * `EUCLIDEAN` - d-dimensional Euclidean space. Points are coordinate vectors.
    * `LINE` - the real line. Points are scalars.
    * `EXPLICIT` - finite point set with an explicit distance matrix. Points are indices into the matrix.
    """

    EUCLIDEAN = 'euclidean'
    LINE = 'line'
    EXPLICIT = 'explicit'


class Point:
    __slots__ = ('kind', 'coords')

    def __init__(self, kind: str, coords: Coordinates):
        """Point of a metric space.

        Points are normally created with :py:meth:`~depart.metric.MetricSpace.point`, which also checks
        that the point belongs to the space.

        :param kind:
                Kind of the space the point lives in. See :py:class:`~depart.metric.SpaceKind`
        :param coords:
                Tuple of floats for euclidean points, float for line points, int index for explicit points.
        """
        if kind == SpaceKind.EUCLIDEAN:
            coords = tuple(float(c) for c in np.ravel(coords))
        elif kind == SpaceKind.LINE:
            coords = float(np.ravel(coords)[0]) if np.ndim(coords) else float(coords)
        elif kind == SpaceKind.EXPLICIT:
            index = np.ravel(coords)[0] if np.ndim(coords) else coords
            if not np.isfinite(index) or int(index) != index:
                raise ValidationError('Explicit point index must be an integer, not {!r}.'.format(index))
            coords = int(index)
        else:
            raise ValueError('Unknown space kind {!r}.'.format(kind))
        if kind != SpaceKind.EXPLICIT and not np.all(np.isfinite(coords)):
            raise ValidationError('Point coordinates must be finite, not {!r}.'.format(coords))
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'coords', coords)

    def __setattr__(self, key, value):
        raise AttributeError('Point is immutable.')

    def __reduce__(self):
        return Point, (self.kind, self.coords)

    def as_list(self) -> List[float]:
        """Coordinates as a flat list (length 1 for line and explicit points)."""
        if self.kind == SpaceKind.EUCLIDEAN:
            return list(self.coords)
        return [self.coords]

    def __eq__(self, other):
        return (
                isinstance(other, Point)
                and self.kind == other.kind
                and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.kind, self.coords))

    def __str__(self):
        if self.kind == SpaceKind.EUCLIDEAN:
            return '({})'.format(', '.join('{:g}'.format(c) for c in self.coords))
        elif self.kind == SpaceKind.LINE:
            return '{:g}'.format(self.coords)
        return '#{}'.format(self.coords)

    def __repr__(self):
        return '<Point {}>'.format(self.__str__())


class MetricViolation:
    SYMMETRY = 'symmetry'
    DIAGONAL = 'diagonal'
    IDENTITY = 'identity'
    NEGATIVE = 'negative'
    TRIANGLE = 'triangle'

    def __init__(self, kind: str, indices: Tuple[int, ...], detail: str = ''):
        """Single violated metric axiom.

        :param kind:
                Which axiom is violated (one of the class constants)
        :param indices:
                Point indices involved: (p, q) for pairwise axioms, (p, q, r) for the triangle inequality
                meaning d(p, r) > d(p, q) + d(q, r)
        :param detail:
                Human readable description
        """
        self.kind = kind
        self.indices = tuple(indices)
        self.detail = detail

    def __eq__(self, other):
        return (
                isinstance(other, MetricViolation)
                and self.kind == other.kind
                and self.indices == other.indices
        )

    def __str__(self):
        return '{} violation at {}{}'.format(self.kind, self.indices, ': ' + self.detail if self.detail else '')

    def __repr__(self):
        return '<MetricViolation {}>'.format(self.__str__())


class MetricReport:
    def __init__(self, violations: Optional[List[MetricViolation]] = None):
        """Result of :py:func:`~depart.metric.validate_metric`. Empty report means the space is a metric."""
        self.violations = violations or []

    @property
    def ok(self) -> bool:
        return not self.violations

    def of_kind(self, kind: str) -> List[MetricViolation]:
        return [v for v in self.violations if v.kind == kind]

    def __str__(self):
        if self.ok:
            return 'ok'
        return '{} violation(s), first: {}'.format(len(self.violations), self.violations[0])

    def __repr__(self):
        return '<MetricReport {}>'.format(self.__str__())


class MetricSpace(ABC):
    kind: str

    def point(self, coords: Coordinates) -> Point:
        """Creates a point of this space and checks that it belongs to it."""
        p = Point(self.kind, coords)
        self.ensure_contains(p)
        return p

    def points(self, coords_list: Iterable[Coordinates]) -> List[Point]:
        return [self.point(c) for c in coords_list]

    @abstractmethod
    def contains(self, p: Point) -> bool:
        pass

    def ensure_contains(self, p: Point):
        if not isinstance(p, Point):
            raise TypeError('The point must be Point, not {!r}.'.format(p.__class__.__name__))
        if not self.contains(p):
            raise ValidationError('Point {} does not belong to {}.'.format(p, self))

    def dist(self, p: Point, q: Point) -> float:
        self.ensure_contains(p)
        self.ensure_contains(q)
        return self._dist(p, q)

    @abstractmethod
    def _dist(self, p: Point, q: Point) -> float:
        pass

    def distance_matrix(self, points: Sequence[Point], others: Optional[Sequence[Point]] = None) -> np.ndarray:
        """Pairwise distances between `points` (rows) and `others` (columns, defaults to `points`)."""
        others = points if others is None else others
        for p in points:
            self.ensure_contains(p)
        for q in others:
            self.ensure_contains(q)
        if not points or not others:
            return np.zeros((len(points), len(others)))
        return self._distance_matrix(points, others)

    @abstractmethod
    def _distance_matrix(self, points: Sequence[Point], others: Sequence[Point]) -> np.ndarray:
        pass

    def interpolate(self, p: Point, q: Point, s: float) -> Point:
        """Point at fraction `s` of the straight segment from `p` to `q`."""
        raise UnsupportedOperationError('{} has no canonical geodesic to interpolate along.'.format(self))

    @property
    def is_geodesic(self) -> bool:
        return False

    def validate(self) -> MetricReport:
        return MetricReport()

    @staticmethod
    def _check_fraction(s: float):
        if not 0.0 <= s <= 1.0:
            raise ValueError('Interpolation fraction must be in [0, 1], not {}.'.format(s))

    def __ne__(self, other):
        return not self.__eq__(other)


class EuclideanSpace(MetricSpace):
    kind = SpaceKind.EUCLIDEAN

    def __init__(self, dim: int):
        """
        :param dim:
                Ambient dimension d >= 1
        """
        if int(dim) != dim or dim < 1:
            raise ValidationError('Euclidean dimension must be a positive integer, not {!r}.'.format(dim))
        self.dim = int(dim)

    def contains(self, p: Point) -> bool:
        return p.kind == self.kind and len(p.coords) == self.dim

    def _dist(self, p: Point, q: Point) -> float:
        diff = np.asarray(p.coords) - np.asarray(q.coords)
        return float(np.sqrt(np.sum(diff * diff)))

    def _distance_matrix(self, points, others):
        a = np.array([p.coords for p in points], dtype=float)
        b = np.array([q.coords for q in others], dtype=float)
        diff = a[:, None, :] - b[None, :, :]
        return np.sqrt(np.sum(diff * diff, axis=-1))

    def interpolate(self, p: Point, q: Point, s: float) -> Point:
        self.ensure_contains(p)
        self.ensure_contains(q)
        self._check_fraction(s)
        if s == 0.0 or p == q:
            return p
        if s == 1.0:
            return q
        return Point(self.kind, tuple(a + s * (b - a) for a, b in zip(p.coords, q.coords)))

    @property
    def is_geodesic(self) -> bool:
        return True

    def validate(self) -> MetricReport:
        return MetricReport()

    def __eq__(self, other):
        return isinstance(other, EuclideanSpace) and self.dim == other.dim

    def __hash__(self):
        return hash((self.kind, self.dim))

    def __str__(self):
        return 'euclidean space of dimension {}'.format(self.dim)

    def __repr__(self):
        return '<EuclideanSpace dim={}>'.format(self.dim)


class LineSpace(MetricSpace):
    kind = SpaceKind.LINE

    def contains(self, p: Point) -> bool:
        return p.kind == self.kind

    def _dist(self, p: Point, q: Point) -> float:
        return abs(p.coords - q.coords)

    def _distance_matrix(self, points, others):
        a = np.array([p.coords for p in points], dtype=float)
        b = np.array([q.coords for q in others], dtype=float)
        return np.abs(a[:, None] - b[None, :])

    def interpolate(self, p: Point, q: Point, s: float) -> Point:
        self.ensure_contains(p)
        self.ensure_contains(q)
        self._check_fraction(s)
        if s == 0.0 or p == q:
            return p
        if s == 1.0:
            return q
        return Point(self.kind, p.coords + s * (q.coords - p.coords))

    @property
    def is_geodesic(self) -> bool:
        return True

    def __eq__(self, other):
        return isinstance(other, LineSpace)

    def __hash__(self):
        return hash(self.kind)

    def __str__(self):
        return 'line'

    def __repr__(self):
        return '<LineSpace>'


class ExplicitSpace(MetricSpace):
    kind = SpaceKind.EXPLICIT

    def __init__(self, matrix):
        """Finite metric space given by its distance matrix.

        The matrix is only checked for shape and finite entries here; use
        :py:func:`~depart.metric.validate_metric` to check the metric axioms.

        :param matrix:
                Square matrix of real distances. Point `i` of the space is row/column `i`.
        """
        matrix = np.array(matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
            raise ValidationError('Distance matrix must be square and non-empty, got shape {}.'.format(matrix.shape))
        if not np.all(np.isfinite(matrix)):
            raise ValidationError('Distance matrix entries must be finite.')
        matrix.setflags(write=False)
        self.matrix = matrix

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def contains(self, p: Point) -> bool:
        return p.kind == self.kind and 0 <= p.coords < self.size

    def _dist(self, p: Point, q: Point) -> float:
        return float(self.matrix[p.coords, q.coords])

    def _distance_matrix(self, points, others):
        rows = [p.coords for p in points]
        cols = [q.coords for q in others]
        return self.matrix[np.ix_(rows, cols)].copy()

    def validate(self) -> MetricReport:
        m = self.matrix
        n = self.size
        violations = []

        for i in range(n):
            if abs(m[i, i]) > TOLERANCE:
                violations.append(MetricViolation(MetricViolation.DIAGONAL, (i, i), 'd = {}'.format(m[i, i])))

        for i, j in zip(*np.nonzero(m < -TOLERANCE)):
            violations.append(MetricViolation(MetricViolation.NEGATIVE, (int(i), int(j)),
                                              'd = {}'.format(m[i, j])))

        for i, j in zip(*np.nonzero(np.triu(np.abs(m - m.T) > TOLERANCE, k=1))):
            violations.append(MetricViolation(MetricViolation.SYMMETRY, (int(i), int(j)),
                                              'd({0},{1}) = {2} but d({1},{0}) = {3}'.format(i, j, m[i, j], m[j, i])))

        off_diagonal = ~np.eye(n, dtype=bool)
        for i, j in zip(*np.nonzero(off_diagonal & (m <= TOLERANCE) & (m >= -TOLERANCE))):
            if i < j:
                violations.append(MetricViolation(MetricViolation.IDENTITY, (int(i), int(j)),
                                                  'distinct points at distance 0'))

        for q in range(n):
            # through[p, r] = d(p, q) + d(q, r)
            through = m[:, q][:, None] + m[q, :][None, :]
            for p, r in zip(*np.nonzero(m > through + TOLERANCE)):
                violations.append(MetricViolation(
                    MetricViolation.TRIANGLE, (int(p), q, int(r)),
                    'd({0},{2}) = {3} > d({0},{1}) + d({1},{2}) = {4}'.format(p, q, r, m[p, r], through[p, r])
                ))

        violations.sort(key=lambda v: (v.kind, v.indices))
        return MetricReport(violations)

    def __eq__(self, other):
        return isinstance(other, ExplicitSpace) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.kind, self.matrix.tobytes()))

    def __str__(self):
        return 'explicit space of {} points'.format(self.size)

    def __repr__(self):
        return '<ExplicitSpace size={}>'.format(self.size)


def dist(space: MetricSpace, p: Point, q: Point) -> float:
    return space.dist(p, q)


def interpolate(space: MetricSpace, p: Point, q: Point, s: float) -> Point:
    """Point at fraction `s` in [0, 1] of the straight segment from `p` to `q`.

    :raises:
        UnsupportedOperationError: for explicit-matrix spaces
    """
    return space.interpolate(p, q, s)


def validate_metric(space: MetricSpace) -> MetricReport:
    """Exhaustive axiom check for explicit matrices, structural check otherwise.

    Violations are reported, never raised.
    """
    return space.validate()


def distance_matrix(space: MetricSpace, points: Sequence[Point], others: Optional[Sequence[Point]] = None):
    return space.distance_matrix(points, others)


def metric_closure(weights) -> ExplicitSpace:
    """Shortest-path closure of an undirected weighted graph.

    :param weights:
            Square matrix of edge weights. Zero or infinite entries mean "no edge".
    :raises:
        ValidationError: if the graph is disconnected
    """
    weights = np.array(weights, dtype=float)
    weights[~np.isfinite(weights)] = 0.0
    closure = shortest_path(weights, method='D', directed=False)
    if not np.all(np.isfinite(closure)):
        raise ValidationError('Graph is disconnected, its shortest-path closure is not a metric.')
    return ExplicitSpace(closure)


def is_collinear(space: MetricSpace, points: Sequence[Point], tol: float = TOLERANCE) -> bool:
    """Whether d(x_i, x_j) + d(x_j, x_k) = d(x_i, x_k) for all index-ordered triples i < j < k."""
    n = len(points)
    if n < 3:
        return True
    d = space.distance_matrix(points)
    for j in range(1, n - 1):
        through = d[:j, j][:, None] + d[j, j + 1:][None, :]
        if np.any(np.abs(through - d[:j, j + 1:]) > tol):
            return False
    return True
