from .betti import freeness_certificate, generators_of, koszul_maps, koszul_xi0, koszul_xi1
from .config import Axis
from .construction import free_grid_module, free_morphism, submodule
from .distance import free_bottleneck, generator_matching
from .interpolant import (
    coker_triviality,
    directional_coker_triviality,
    image_bases,
    interpolant,
    interpolant_bases,
    interpolant_factorization,
    is_monomorphism,
)
from .models import GeneratorMultiset, GridModule2D, GridMorphism2D, Point, Window

__all__ = [
    "Axis",
    "Point",
    "Window",
    "GridModule2D",
    "GridMorphism2D",
    "GeneratorMultiset",
    "free_grid_module",
    "free_morphism",
    "submodule",
    "koszul_maps",
    "koszul_xi1",
    "koszul_xi0",
    "generators_of",
    "freeness_certificate",
    "image_bases",
    "interpolant_bases",
    "interpolant",
    "interpolant_factorization",
    "is_monomorphism",
    "coker_triviality",
    "directional_coker_triviality",
    "free_bottleneck",
    "generator_matching",
]
