from pydantic import Field, NonNegativeInt

from blockstab.base_model import FrozenModel
from blockstab.values import NonNegativeRational, Rational


class Vertex(FrozenModel):
    """Model representing a graph vertex and its function value.

    Attributes
    ----------
    - `id` (`int`): Vertex identifier
    - `value` (`Rational`): Value of the PL function at the vertex
    """

    id: int
    value: Rational


class PLGraph(FrozenModel):
    """Model representing a finite graph with a function that is linear on every edge.

    Attributes
    ----------
    - `vertices` (`tuple[Vertex, ...]`): Vertices with their values
    - `edges` (`tuple[tuple[int, int], ...]`): Unordered vertex id pairs; parallel edges by repetition

    Notes
    -----
    - The model only checks types; `validate_pl_graph` reports the Morse-type conditions.
    """

    vertices: tuple[Vertex, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, values: dict[int, object], edges: list[tuple[int, int]]) -> "PLGraph":
        return cls.model_validate(
            {"vertices": [{"id": k, "value": v} for k, v in values.items()], "edges": edges},
        )

    def values(self) -> dict[int, Rational]:
        return {vertex.id: vertex.value for vertex in self.vertices}

    def critical_values(self) -> list[Rational]:
        """Return the sorted distinct vertex values `s₁ < … < s_m`."""
        return sorted({vertex.value for vertex in self.vertices})


class GraphIssue(FrozenModel):
    """Model representing one violation found by `validate_pl_graph`.

    Attributes
    ----------
    - `location` (`str`): Offending vertex or edge, e.g. `edges[3]`
    - `message` (`str`): What is wrong
    """

    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


class PreimageNode(FrozenModel):
    """Model representing a node of an interlevel set: an original vertex or a point where an edge crosses the band edge.

    Attributes
    ----------
    - `vertex` (`int`, optional): Vertex id, for original vertices
    - `edge` (`int`, optional): Edge index, for crossing points
    - `value` (`Rational`): Function value at the node
    """

    vertex: int | None = None
    edge: int | None = None
    value: Rational

    @property
    def key(self) -> tuple[object, ...]:
        if self.vertex is not None:
            return ("v", self.vertex)
        return ("x", self.edge, self.value)


class Fragment(FrozenModel):
    """Model representing the part of one edge inside the band.

    Attributes
    ----------
    - `edge` (`int`): Index of the edge in the ambient graph
    - `low` (`int`): Node index of the lower end
    - `high` (`int`): Node index of the upper end
    """

    edge: int
    low: int
    high: int


class PreimageGraph(FrozenModel):
    """Model representing the interlevel set `γ⁻¹([x, y])` of a PL graph.

    Attributes
    ----------
    - `x`, `y` (`Rational`): Band bounds
    - `nodes` (`tuple[PreimageNode, ...]`): Vertices in the band and edge crossing points
    - `fragments` (`tuple[Fragment, ...]`): Edge fragments inside the band, at most one per edge
    - `components` (`tuple[NonNegativeInt, ...]`): Connected component index of each node
    - `h0` (`NonNegativeInt`): Number of connected components
    - `h1` (`NonNegativeInt`): Cycle rank, `fragments − nodes + h0`
    """

    x: Rational
    y: Rational
    nodes: tuple[PreimageNode, ...] = ()
    fragments: tuple[Fragment, ...] = ()
    components: tuple[NonNegativeInt, ...] = ()
    h0: NonNegativeInt = 0
    h1: NonNegativeInt = 0

    def betti(self, degree: int) -> int:
        return self.h0 if degree == 0 else self.h1


class PerturbedGraph(FrozenModel):
    """Model representing the output of `perturb`.

    Attributes
    ----------
    - `graph` (`PLGraph`): Perturbed graph, of Morse type
    - `realized_distance` (`NonNegativeRational`): `max |γ(v) − κ(v)|` over the vertices
    - `attempts` (`int`): Samples drawn before a Morse-type graph came out
    """

    graph: PLGraph
    realized_distance: NonNegativeRational
    attempts: int = Field(default=1, ge=1)
