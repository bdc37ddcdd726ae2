"""Exact calculus of quiddity sequences, friezes and matrix continuants over Q(i)."""
from .errors import (
    MathFailure,
    NonCommuting,
    NotATriangulationQuiddity,
    NotQuiddity,
    SingularMatrix,
    ValidationError,
)
from .gaussian import GaussRational, gq
from .matrix import Block2x2, Matrix, commutator, mat_det, mat_inv, schur_complement
from .sequences import (
    MonodromyClass,
    QuidditySeq,
    boxplus,
    bullet,
    check_exclusion,
    check_operad_axioms,
    circ,
    id_circ,
    monodromy,
    rotate,
)
from .polygon import (
    Dissection,
    enumerate_dissections,
    glue_bullet,
    glue_circ,
    ovsienko_index,
    quiddity_of,
    triangulation_of,
)
from .matrix_quiddity import BiSequence, MatrixSeq, Side, block_monodromy
from .frieze import (
    MatrixFrieze,
    ScalarFrieze,
    build_matrix_frieze,
    build_scalar_frieze,
    render_ascii,
    scalarize,
    transpose_frieze,
)
from .chebyshev import cheb_left, cheb_pair, cheb_poly, continuant_block

__version__ = "0.1.0"
