from .density import router as density_router
from .mahavier import router as mahavier_router
from .orbit import router as orbit_router
from .transitive_point import router as transitive_point_router
from .sigma_chain import router as sigma_chain_router
from .render import router as render_router
from .verify import router as verify_router

__all__ = [
    "density_router", "mahavier_router", "orbit_router",
    "transitive_point_router", "sigma_chain_router",
    "render_router", "verify_router"
]
