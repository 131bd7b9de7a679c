import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from thetanerve.utils.validation import ValidationReport

LOGGER = logging.getLogger(__name__)


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.int64, copy=True)
    array.setflags(write=False)
    return array


class FinCategory:
    """A finite 1-category stored as dense index tables.

    Objects are ``0..n_objects-1`` and morphisms ``0..n_morphisms-1``. The
    composition table is indexed ``[g, f]`` and holds ``g∘f``, or ``-1`` when
    ``target(f) != source(g)``.

    Example
    -------
    ```python
    from thetanerve.categories.fincat import ordinal, product, opposite

    square = product(ordinal(1), opposite(ordinal(1)))
    print(square.n_objects, square.n_morphisms)  # 4 9
    ```

    Parameters
    ----------
    n_objects : int
        The number of objects.
    sources : Sequence[int]
        Source object of every morphism.
    targets : Sequence[int]
        Target object of every morphism.
    identities : Sequence[int]
        Identity morphism of every object.
    compose : array-like of shape (n_morphisms, n_morphisms)
        The partial composition table.
    object_labels : Sequence[str], optional
        Display names of the objects. They play no part in equality.
    morphism_labels : Sequence[str], optional
        Display names of the morphisms. They play no part in equality.

    Raises
    ------
    ValueError
        If the tables do not describe a category.
    """

    def __init__(self,
                 n_objects: int,
                 sources: Sequence[int],
                 targets: Sequence[int],
                 identities: Sequence[int],
                 compose,
                 object_labels: Optional[Sequence[str]] = None,
                 morphism_labels: Optional[Sequence[str]] = None):

        self.n_objects = int(n_objects)
        self.sources = _frozen(np.asarray(sources, dtype=np.int64).reshape(-1))
        self.targets = _frozen(np.asarray(targets, dtype=np.int64).reshape(-1))
        self.identities = _frozen(np.asarray(identities, dtype=np.int64).reshape(-1))

        n_morphisms = self.sources.shape[0]
        compose = np.asarray(compose, dtype=np.int64)
        if compose.size != n_morphisms * n_morphisms:
            message = f"Composition table of size {compose.size} does not fit {n_morphisms} morphisms."
            LOGGER.error(message)
            raise ValueError(message)
        self.compose_table = _frozen(compose.reshape(n_morphisms, n_morphisms))

        if object_labels is None:
            object_labels = [str(a) for a in range(self.n_objects)]
        if morphism_labels is None:
            morphism_labels = [f"{object_labels[s]}->{object_labels[t]}" for s, t in zip(self.sources.tolist(), self.targets.tolist())]
        self.object_labels = tuple(str(label) for label in object_labels)
        self.morphism_labels = tuple(str(label) for label in morphism_labels)

        if len(self.object_labels) != self.n_objects or len(self.morphism_labels) != n_morphisms:
            message = "Label lists must have one entry per object and per morphism."
            LOGGER.error(message)
            raise ValueError(message)

        report = self.validate()
        if not report:
            message = f"Invalid category tables: {report.diagnostics[0]}"
            LOGGER.error(message)
            raise ValueError(message)

    @property
    def n_morphisms(self) -> int:
        return int(self.sources.shape[0])

    @cached_property
    def _key(self) -> tuple:
        return (self.n_objects,
                self.sources.tobytes(),
                self.targets.tobytes(),
                self.identities.tobytes(),
                self.compose_table.tobytes())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinCategory):
            return NotImplemented
        return self is other or self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FinCategory(n_objects={self.n_objects}, n_morphisms={self.n_morphisms})"

    @cached_property
    def hom_counts(self) -> np.ndarray:
        """``hom_counts[a, b]`` is the number of morphisms ``a -> b``."""
        counts = np.zeros((self.n_objects, self.n_objects), dtype=np.int64)
        np.add.at(counts, (self.sources, self.targets), 1)
        counts.setflags(write=False)
        return counts

    @cached_property
    def _homs(self) -> dict[tuple[int, int], tuple[int, ...]]:
        homs: dict[tuple[int, int], list[int]] = {}
        for f, (a, b) in enumerate(zip(self.sources.tolist(), self.targets.tolist())):
            homs.setdefault((a, b), []).append(f)
        return {pair: tuple(fs) for pair, fs in homs.items()}

    @cached_property
    def is_thin(self) -> bool:
        """True when every hom-set has at most one element (a preorder)."""
        return self.n_objects == 0 or int(self.hom_counts.max()) <= 1

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        """The morphisms ``a -> b`` in increasing index order."""
        return self._homs.get((a, b), ())

    def identity(self, a: int) -> int:
        return int(self.identities[a])

    def source(self, f: int) -> int:
        return int(self.sources[f])

    def target(self, f: int) -> int:
        return int(self.targets[f])

    def compose(self, g: int, f: int) -> Optional[int]:
        """``g∘f``, or None when the pair is not composable."""
        h = int(self.compose_table[g, f])
        return None if h < 0 else h

    def is_identity(self, f: int) -> bool:
        return int(self.identities[self.sources[f]]) == f

    def relabel(self,
                object_labels: Optional[Sequence[str]] = None,
                morphism_labels: Optional[Sequence[str]] = None) -> "FinCategory":
        """Same tables, new display names."""
        return FinCategory(self.n_objects, self.sources, self.targets, self.identities, self.compose_table,
                           object_labels=object_labels if object_labels is not None else self.object_labels,
                           morphism_labels=morphism_labels)

    def validate(self) -> ValidationReport:
        """Checks the category axioms by exhaustive table scans.

        Returns
        -------
        ValidationReport
            Invalid with the first violated law named in the diagnostics.
        """
        n_objects, n_morphisms = self.n_objects, self.n_morphisms
        sources, targets, identities, compose = self.sources, self.targets, self.identities, self.compose_table
        objects = np.arange(n_objects)
        morphisms = np.arange(n_morphisms)

        if targets.shape[0] != n_morphisms:
            return ValidationReport.failure("sources and targets have different lengths")
        if identities.shape[0] != n_objects:
            return ValidationReport.failure("there must be exactly one identity per object")
        if n_morphisms and (sources.min() < 0 or targets.min() < 0
                            or sources.max() >= n_objects or targets.max() >= n_objects):
            return ValidationReport.failure("a morphism has an endpoint outside the object range")
        if n_objects and (identities.min() < 0 or identities.max() >= n_morphisms):
            return ValidationReport.failure("an identity is outside the morphism range")
        if np.any((compose < -1) | (compose >= n_morphisms)):
            return ValidationReport.failure("the composition table refers to an unknown morphism")
        if np.any(sources[identities] != objects) or np.any(targets[identities] != objects):
            return ValidationReport.failure("an identity is not an endomorphism of its object")

        composable = sources[:, None] == targets[None, :]
        defined = compose >= 0
        mismatch = np.argwhere(composable != defined)
        if mismatch.size:
            g, f = mismatch[0].tolist()
            state = "defined" if defined[g, f] else "undefined"
            return ValidationReport.failure(f"composition {state} on the pair (g={g}, f={f})")

        g_idx, f_idx = np.nonzero(defined)
        composites = compose[g_idx, f_idx]
        wrong = np.nonzero((sources[composites] != sources[f_idx]) | (targets[composites] != targets[g_idx]))[0]
        if wrong.size:
            g, f = int(g_idx[wrong[0]]), int(f_idx[wrong[0]])
            return ValidationReport.failure(f"composite of (g={g}, f={f}) has the wrong endpoints")

        left = compose[identities[targets], morphisms] if n_morphisms else morphisms
        right = compose[morphisms, identities[sources]] if n_morphisms else morphisms
        bad = np.nonzero((left != morphisms) | (right != morphisms))[0]
        if bad.size:
            return ValidationReport.failure(f"identity law fails for morphism {int(bad[0])}")

        for g in range(n_morphisms):
            fs = np.nonzero(compose[g] >= 0)[0]
            hs = np.nonzero(compose[:, g] >= 0)[0]
            if not fs.size or not hs.size:
                continue
            lhs = compose[np.ix_(hs, compose[g, fs])]
            rhs = compose[np.ix_(compose[hs, g], fs)]
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                h_pos, f_pos = bad[0].tolist()
                return ValidationReport.failure(
                    f"associativity fails on (h={int(hs[h_pos])}, g={g}, f={int(fs[f_pos])})")

        return ValidationReport.ok()


@dataclass(frozen=True)
class FunctorData:
    """A functor between finite categories given by its two index maps."""
    source: FinCategory
    target: FinCategory
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "obj_map", tuple(int(x) for x in self.obj_map))
        object.__setattr__(self, "mor_map", tuple(int(x) for x in self.mor_map))

    @classmethod
    def identity(cls, category: FinCategory) -> "FunctorData":
        return cls(category, category, range(category.n_objects), range(category.n_morphisms))

    @classmethod
    def constant(cls, source: FinCategory, target: FinCategory, obj: int) -> "FunctorData":
        return cls(source, target, [obj] * source.n_objects, [target.identity(obj)] * source.n_morphisms)

    @classmethod
    def empty(cls, target: FinCategory) -> "FunctorData":
        return cls(ordinal(-1), target, (), ())


@lru_cache(maxsize=None)
def ordinal_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Morphisms of ``[n]`` as pairs ``(i, j)`` with ``i <= j``, in the index order of ``ordinal(n)``."""
    return tuple((i, j) for i in range(n + 1) for j in range(i, n + 1))


@lru_cache(maxsize=None)
def ordinal_pair_table(n: int) -> np.ndarray:
    """``table[i, j]`` is the morphism index of ``i <= j`` in ``ordinal(n)``, ``-1`` if ``i > j``."""
    table = np.full((n + 1, n + 1), -1, dtype=np.int64)
    for index, (i, j) in enumerate(ordinal_pairs(n)):
        table[i, j] = index
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def ordinal(n: int) -> FinCategory:
    """The poset ``0 < 1 < ... < n`` as a category; ``ordinal(-1)`` is empty.

    Parameters
    ----------
    n : int
        The largest object, at least -1.

    Returns
    -------
    FinCategory
        The category ``[n]``.

    Raises
    ------
    ValueError
        If ``n < -1``.
    """
    if n < -1:
        message = f"The ordinal [{n}] does not exist, n must be at least -1."
        LOGGER.error(message)
        raise ValueError(message)

    pairs = ordinal_pairs(n)
    table = ordinal_pair_table(n)
    n_morphisms = len(pairs)
    compose = np.full((n_morphisms, n_morphisms), -1, dtype=np.int64)
    for f, (i, j) in enumerate(pairs):
        for k in range(j, n + 1):
            compose[table[j, k], f] = table[i, k]

    return FinCategory(n + 1,
                       [i for i, _ in pairs],
                       [j for _, j in pairs],
                       [table[a, a] for a in range(n + 1)],
                       compose,
                       morphism_labels=[f"{i}<={j}" for i, j in pairs])


def opposite(category: FinCategory) -> FinCategory:
    """Same objects and morphisms, endpoints swapped, composition transposed."""
    return FinCategory(category.n_objects,
                       category.targets,
                       category.sources,
                       category.identities,
                       category.compose_table.T,
                       object_labels=category.object_labels,
                       morphism_labels=category.morphism_labels)


def product(first: FinCategory, second: FinCategory) -> FinCategory:
    """The binary product.

    Object ``(a, b)`` has index ``a * second.n_objects + b`` and morphism
    ``(f, g)`` has index ``f * second.n_morphisms + g``.
    """
    n_obj, m_obj = first.n_objects, second.n_objects
    n_mor, m_mor = first.n_morphisms, second.n_morphisms

    sources = (first.sources[:, None] * m_obj + second.sources[None, :]).reshape(-1)
    targets = (first.targets[:, None] * m_obj + second.targets[None, :]).reshape(-1)
    identities = (first.identities[:, None] * m_mor + second.identities[None, :]).reshape(-1)

    outer = first.compose_table[:, None, :, None]
    inner = second.compose_table[None, :, None, :]
    compose = np.where((outer >= 0) & (inner >= 0), outer * m_mor + inner, -1)
    compose = compose.reshape(n_mor * m_mor, n_mor * m_mor)

    object_labels = [f"({a},{b})" for a in first.object_labels for b in second.object_labels]
    morphism_labels = [f"({f},{g})" for f in first.morphism_labels for g in second.morphism_labels]
    return FinCategory(n_obj * m_obj, sources, targets, identities, compose,
                       object_labels=object_labels, morphism_labels=morphism_labels)


@lru_cache(maxsize=None)
def matrix_domain(k: int, l: int) -> FinCategory:
    """The indexing category ``[k] x [l]^op`` of a matrix with ``k+1`` rows and ``l+1`` columns."""
    return product(ordinal(k), opposite(ordinal(l)))


def validate_functor(functor: FunctorData) -> ValidationReport:
    """Checks that the index maps preserve endpoints, identities and composites.

    Parameters
    ----------
    functor : FunctorData
        The candidate functor.

    Returns
    -------
    ValidationReport
        Invalid with the first violated law (and offending pair) in the diagnostics.
    """
    source, target = functor.source, functor.target
    if len(functor.obj_map) != source.n_objects:
        return ValidationReport.failure(f"obj_map has {len(functor.obj_map)} entries for {source.n_objects} objects")
    if len(functor.mor_map) != source.n_morphisms:
        return ValidationReport.failure(f"mor_map has {len(functor.mor_map)} entries for {source.n_morphisms} morphisms")

    obj_map = np.asarray(functor.obj_map, dtype=np.int64)
    mor_map = np.asarray(functor.mor_map, dtype=np.int64)
    if obj_map.size and (obj_map.min() < 0 or obj_map.max() >= target.n_objects):
        return ValidationReport.failure("obj_map leaves the target object range")
    if mor_map.size and (mor_map.min() < 0 or mor_map.max() >= target.n_morphisms):
        return ValidationReport.failure("mor_map leaves the target morphism range")
    if not mor_map.size:
        return ValidationReport.ok()

    bad = np.nonzero((target.sources[mor_map] != obj_map[source.sources])
                     | (target.targets[mor_map] != obj_map[source.targets]))[0]
    if bad.size:
        return ValidationReport.failure(f"source/target not preserved by morphism {int(bad[0])}")

    bad = np.nonzero(mor_map[source.identities] != target.identities[obj_map])[0]
    if bad.size:
        return ValidationReport.failure(f"identity of object {int(bad[0])} not preserved")

    g_idx, f_idx = np.nonzero(source.compose_table >= 0)
    image_of_composite = mor_map[source.compose_table[g_idx, f_idx]]
    composite_of_images = target.compose_table[mor_map[g_idx], mor_map[f_idx]]
    bad = np.nonzero(image_of_composite != composite_of_images)[0]
    if bad.size:
        g, f = int(g_idx[bad[0]]), int(f_idx[bad[0]])
        return ValidationReport.failure(f"composite not preserved on the pair (g={g}, f={f})")

    return ValidationReport.ok()


@lru_cache(maxsize=None)
def _composition_checks(category: FinCategory) -> tuple[tuple[tuple[int, int, int], ...], ...]:
    # triples (g, f, g∘f) grouped by their largest morphism index
    g_idx, f_idx = np.nonzero(category.compose_table >= 0)
    h_idx = category.compose_table[g_idx, f_idx]
    checks: list[list[tuple[int, int, int]]] = [[] for _ in range(category.n_morphisms)]
    for g, f, h in zip(g_idx.tolist(), f_idx.tolist(), h_idx.tolist()):
        checks[max(g, f, h)].append((g, f, h))
    return tuple(tuple(group) for group in checks)


def _iter_object_maps(source: FinCategory, target: FinCategory) -> Iterator[tuple[int, ...]]:
    source_homs = (source.hom_counts > 0).tolist()
    target_homs = (target.hom_counts > 0).tolist()
    n_objects = source.n_objects
    assignment = [0] * n_objects

    def extend(o: int) -> Iterator[tuple[int, ...]]:
        if o == n_objects:
            yield tuple(assignment)
            return
        for x in range(target.n_objects):
            if all((not source_homs[p][o] or target_homs[assignment[p]][x])
                   and (not source_homs[o][p] or target_homs[x][assignment[p]])
                   for p in range(o)):
                assignment[o] = x
                yield from extend(o + 1)

    yield from extend(0)


def _iter_morphism_maps(source: FinCategory, target: FinCategory, obj_map: tuple[int, ...]) -> Iterator[FunctorData]:
    candidates = [target.hom(obj_map[s], obj_map[t])
                  for s, t in zip(source.sources.tolist(), source.targets.tolist())]
    for a, f in enumerate(source.identities.tolist()):
        candidates[f] = (target.identity(obj_map[a]),)
    if any(not options for options in candidates):
        return

    if target.is_thin:
        yield FunctorData(source, target, obj_map, [options[0] for options in candidates])
        return

    checks = _composition_checks(source)
    compose = target.compose_table
    n_morphisms = source.n_morphisms
    assignment = [0] * n_morphisms

    def extend(i: int) -> Iterator[FunctorData]:
        if i == n_morphisms:
            yield FunctorData(source, target, obj_map, assignment)
            return
        for option in candidates[i]:
            assignment[i] = option
            if all(compose[assignment[g], assignment[f]] == assignment[h] for g, f, h in checks[i]):
                yield from extend(i + 1)

    yield from extend(0)


def iter_functors(source: FinCategory, target: FinCategory) -> Iterator[FunctorData]:
    """Streams the functors ``source -> target`` in lexicographic (obj_map, mor_map) order.

    Object maps are chosen first; a partial object map is abandoned as soon as
    a non-empty hom-set of the source would land on an empty one.
    """
    for obj_map in _iter_object_maps(source, target):
        yield from _iter_morphism_maps(source, target, obj_map)


def enumerate_functors(source: FinCategory, target: FinCategory) -> list[FunctorData]:
    """Every functor ``source -> target`` exactly once, see `iter_functors`."""
    return list(iter_functors(source, target))
