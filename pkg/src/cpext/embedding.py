"""Lattice embeddings: injective maps preserving meet and join."""

from dataclasses import dataclass

import numpy as np

from .errors import NotAnEmbedding


@dataclass(frozen=True, eq=False)
class Embedding:
    source: object
    target: object
    map: tuple

    def __post_init__(self):
        m = np.asarray(self.map, dtype=np.int64)
        if m.shape != (self.source.n,):
            raise NotAnEmbedding("map length differs from source size")
        if len(set(self.map)) != len(self.map):
            raise NotAnEmbedding("map is not injective")
        if not (np.array_equal(self.target.meet[m[:, None], m[None, :]], m[self.source.meet])
                and np.array_equal(self.target.join[m[:, None], m[None, :]], m[self.source.join])):
            raise NotAnEmbedding("map does not preserve meet and join")

    def __call__(self, x):
        return self.map[x]

    def image(self):
        return frozenset(self.map)

    @classmethod
    def identity(cls, L):
        return cls(L, L, tuple(range(L.n)))
