"""Jones polynomials of braid closures from graded Bigelow generators."""

from .braid import BraidWord, parse_braid, to_plat, writhe
from .kauffman_oracle import kauffman_jones
from .laurent import LaurentPolynomial
from .pipeline import Analysis, analyze

__all__ = ["Analysis", "BraidWord", "LaurentPolynomial", "analyze", "kauffman_jones", "parse_braid", "to_plat", "writhe"]
