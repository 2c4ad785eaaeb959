"""Generator-substitution maps attached to quiver mutation.

``phi(Q, k)`` conjugates through the mutation vertex: generators with an
arrow into ``k`` map to ``t_k t_i t_k^-1``, everything else is fixed.
Composites of these transport presentations along mutation paths and
standardize any mutation-Dynkin quiver to a Dynkin one.
"""

from __future__ import annotations

import dataclasses

from .errors import UnknownVertexError
from .quivers import Quiver, dynkin_shape, mutate, path_to_dynkin
from .weyl import DynkinType
from .words import GroupHom, compose, identity_hom


def phi(quiver: Quiver, k: int) -> GroupHom:
    """The map into the mutated quiver's group: s_i -> t_k t_i t_k^-1 if i->k."""
    if k not in quiver.vertices:
        raise UnknownVertexError(f"vertex {k} not in quiver")
    images = {}
    for i in quiver.vertices:
        if (i, k) in quiver.arrows:
            images[i] = (k, i, -k)
        else:
            images[i] = (i,)
    return GroupHom(quiver.vertices, quiver.vertices, images)


def phi_inverse(quiver: Quiver, k: int) -> GroupHom:
    """The inverse map: t_i -> s_k^-1 s_i s_k when i->k in the unmutated quiver."""
    if k not in quiver.vertices:
        raise UnknownVertexError(f"vertex {k} not in quiver")
    images = {}
    for i in quiver.vertices:
        if (i, k) in quiver.arrows:
            images[i] = (-k, i, k)
        else:
            images[i] = (i,)
    return GroupHom(quiver.vertices, quiver.vertices, images)


def transport(quiver: Quiver, path: tuple[int, ...] | list[int]) -> tuple[Quiver, GroupHom]:
    """Mutate along ``path``, composing the generator maps as we go."""
    hom = identity_hom(quiver.vertices)
    current = quiver
    for k in path:
        hom = compose(phi(current, k), hom)
        current = mutate(current, k)
    return current, hom


@dataclasses.dataclass(frozen=True)
class Standardization:
    """A mutation path from a quiver to a Dynkin orientation.

    ``hom`` carries words in the source quiver's generators to words in
    the Dynkin quiver's generators; ``vertex_to_node`` relabels the
    latter to standard diagram nodes so they can be evaluated in W.
    """

    dtype: DynkinType
    path: tuple[int, ...]
    hom: GroupHom
    target: Quiver
    vertex_to_node: dict[int, int]

    def to_weyl_word(self, word: tuple[int, ...]) -> tuple[int, ...]:
        image = self.hom(word)
        relabel = self.vertex_to_node
        return tuple(relabel[x] if x > 0 else -relabel[-x] for x in image)


def standardize(quiver: Quiver, budget: int | None = None) -> Standardization:
    """Find a mutation path to a Dynkin orientation and the composed map."""
    dtype, path, target = path_to_dynkin(quiver, budget)
    final, hom = transport(quiver, path)
    assert final == target
    shape = dynkin_shape(final)
    assert shape is not None and shape[0] == dtype
    return Standardization(dtype, tuple(path), hom, final, shape[1])
