import retipy


def test_version_exists():
    assert isinstance(retipy.__version__, str)
    assert retipy.__version__


def test_public_api_attributes():
    """Subpackages and the main entry points are exposed at the top level."""
    for name in ("io", "ops", "schema", "runtime", "profiler"):
        assert hasattr(retipy, name)
    for name in retipy.__all__:
        assert getattr(retipy, name) is not None


def test_top_level_round_trip():
    image = retipy.ImageRgb8.filled(4, 4, (90, 90, 90))
    out = retipy.msrcr(image, retipy.RetinexParams(scale=16))
    assert retipy.shannon(retipy.image_distribution(out)) == 0.0


def test_schema_exports_parameter_bounds():
    from retipy.ops import retinex
    from retipy.schema import MAX_SCALE_DIVISION, MIN_SCALE

    assert (MIN_SCALE, MAX_SCALE_DIVISION) == (3, 8)
    assert retinex.MIN_SCALE == MIN_SCALE
