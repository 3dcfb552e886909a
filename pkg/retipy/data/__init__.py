from .fixtures import DEFAULT_HEIGHT, DEFAULT_SEED, DEFAULT_WIDTH, generate_foggy_image

__all__ = ["generate_foggy_image", "DEFAULT_WIDTH", "DEFAULT_HEIGHT", "DEFAULT_SEED"]
