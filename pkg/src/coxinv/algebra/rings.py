from dataclasses import dataclass
from fractions import Fraction

from coxinv.exceptions import UnknownVariableError


@dataclass(frozen=True)
class VarRing:
    """An ordered set of named variables, optionally weighted.

    Polynomials combine when their rings have the same names in the same order. Weights only matter to
    weighted-degree computations, so a weighted and an unweighted ring over the same names are compatible.
    """

    names: tuple[str, ...]
    weights: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, 'names', tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f'Variable names must be distinct: {self.names}')
        if self.weights is not None:
            weights = tuple(Fraction(w) for w in self.weights)
            if len(weights) != len(self.names):
                raise ValueError('One weight per variable is required')
            if any(w <= 0 for w in weights):
                raise ValueError(f'Weights must be positive: {weights}')
            object.__setattr__(self, 'weights', weights)

    @classmethod
    def of(cls, *names: str, weights=None) -> 'VarRing':
        return cls(tuple(names), tuple(weights) if weights is not None else None)

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(
                f'Unknown variable {name}', extra={'variable': name, 'ring': list(self.names)}
            ) from None

    def compatible(self, other: 'VarRing') -> bool:
        return self.names == other.names

    def has(self, name: str) -> bool:
        return name in self.names

    def __str__(self) -> str:
        return ' '.join(self.names)
