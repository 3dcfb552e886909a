import itertools

import numpy as np
import pytest

from retipy.backend import InvalidParamsError, ReferenceBackend, RetinexLevel
from retipy.image import ImageFloat, ImageRgb8
from retipy.ops.entropy import shannon
from retipy.ops.histogram import image_distribution
from retipy.ops.retinex import (
    color_restoration,
    dynamic_stretch,
    gaussian_blur,
    gaussian_kernel,
    msrcr,
    multi_scale_retinex,
    scale_distribution,
    single_scale_retinex,
)
from retipy.runtime import configure
from retipy.schema import RetinexParams


class TestScaleDistribution:
    def test_uniform_default(self):
        assert scale_distribution("uniform", 240, 3) == [2.0, 82.0, 162.0]

    def test_low_default(self):
        sigmas = scale_distribution(RetinexLevel.LOW, 240, 3)
        assert sigmas == pytest.approx([3.00, 8.20, 40.40], abs=0.01)

    @pytest.mark.parametrize("level", list(RetinexLevel))
    def test_special_cases(self, level):
        assert scale_distribution(level, 240, 1) == [120.0]
        assert scale_distribution(level, 240, 2) == [120.0, 240.0]

    @pytest.mark.parametrize("scale", [16, 240])
    @pytest.mark.parametrize("n", range(3, 9))
    def test_bounds_and_order(self, scale, n):
        for level in RetinexLevel:
            sigmas = scale_distribution(level, scale, n)
            assert len(sigmas) == n
            assert all(2.0 <= s <= scale for s in sigmas)
        low = scale_distribution("low", scale, n)
        high = scale_distribution("high", scale, n)
        assert all(b > a for a, b in zip(low, low[1:]))
        assert all(b < a for a, b in zip(high, high[1:]))

    def test_minimal_scale_collapses(self):
        # ln(scale - 2) = 0, every exponential term is 1
        assert scale_distribution("low", 3, 4) == [3.0] * 4
        assert scale_distribution("high", 3, 4) == [2.0] * 4

    def test_uniform_widths_can_exceed_scale(self):
        sigmas = scale_distribution("uniform", 3, 8)
        assert sigmas == [2.0 + i * 0.375 for i in range(8)]
        assert max(sigmas) == 4.625
        # the exponential levels stay inside [2, scale]
        assert max(scale_distribution("low", 3, 8)) <= 3.0

    @pytest.mark.parametrize("scale, n", [(2, 3), (240, 0), (240, 9), (240.5, 3)])
    def test_invalid(self, scale, n):
        with pytest.raises(InvalidParamsError):
            scale_distribution("uniform", scale, n)


class TestGaussian:
    @pytest.mark.parametrize("sigma", [0.5, 1.0, 2.5, 8.0, 162.0])
    def test_kernel_normalized(self, sigma):
        kernel = gaussian_kernel(sigma)
        assert abs(kernel.sum() - 1.0) < 1e-9
        assert kernel.size == 2 * int(np.ceil(3 * sigma)) + 1
        assert np.allclose(kernel, kernel[::-1])

    def test_sigma_too_small(self):
        with pytest.raises(InvalidParamsError):
            gaussian_kernel(0.4)
        with pytest.raises(InvalidParamsError):
            gaussian_blur(np.zeros((4, 4)), 0.1)

    @pytest.mark.parametrize("sigma", [1.0, 5.0, 40.0])
    def test_constant_image_preserved(self, sigma):
        channel = np.full((12, 9), 77.0)
        assert np.max(np.abs(gaussian_blur(channel, sigma) - 77.0)) <= 1e-6

    def test_impulse_peak_and_mass(self):
        channel = np.zeros((41, 41))
        channel[20, 20] = 1.0
        out = gaussian_blur(channel, 2.0)
        kernel_2d = ReferenceBackend.gaussian_kernel_2d(2.0)
        assert abs(out[20, 20] - kernel_2d.max()) < 1e-12
        assert abs(out.sum() - 1.0) < 1e-6

    def test_matches_direct_convolution(self, rng):
        for _ in range(10):
            channel = rng.uniform(0, 255, size=(64, 64))
            for sigma in (1.0, 2.0, 8.0):
                direct = ReferenceBackend.convolve_2d(channel, sigma)
                assert np.max(np.abs(gaussian_blur(channel, sigma) - direct)) <= 1e-6

    def test_large_sigma_matches_direct_convolution(self, rng):
        channel = rng.uniform(0, 255, size=(10, 14))
        direct = ReferenceBackend.convolve_2d(channel, 30.0)
        assert np.max(np.abs(gaussian_blur(channel, 30.0) - direct)) <= 1e-6


class TestSingleScale:
    def test_constant_channel_is_zero(self):
        assert np.max(np.abs(single_scale_retinex(np.full((8, 8), 200.0), 3.0))) < 1e-12

    def test_finite_on_extremes(self, rng):
        channel = rng.choice([0.0, 255.0], size=(16, 16))
        assert np.all(np.isfinite(single_scale_retinex(channel, 2.0)))

    def test_step_edge(self):
        channel = np.zeros((20, 40))
        channel[:, 20:] = 200.0
        out = single_scale_retinex(channel, 2.0)
        direct = np.log1p(channel) - np.log1p(ReferenceBackend.convolve_2d(channel, 2.0))
        assert np.max(np.abs(out - direct)) <= 1e-6
        assert np.all(out[:, 20:23] > 0)
        assert np.all(out[:, 17:20] < 0)
        assert np.max(np.abs(out[:, :5])) < 1e-12
        assert np.max(np.abs(out[:, 35:])) < 1e-12

    def test_multi_scale_is_mean(self, rng):
        channel = rng.uniform(0, 255, size=(16, 16))
        sigmas = [2.0, 5.0, 9.0]
        expected = sum(single_scale_retinex(channel, s) for s in sigmas) / 3
        assert np.allclose(multi_scale_retinex(channel, sigmas), expected, atol=1e-12)


class TestColorRestoration:
    def test_formula(self):
        data = np.zeros((1, 1, 3))
        data[0, 0] = [10.0, 20.0, 30.0]
        c = color_restoration(ImageFloat(data))
        assert c[0, 0, 0] == pytest.approx(np.log(1281.0) - np.log(63.0))
        assert c[0, 0, 2] == pytest.approx(np.log(3841.0) - np.log(63.0))

    def test_black_pixel_is_finite(self):
        assert np.all(np.isfinite(color_restoration(ImageFloat(np.zeros((2, 2, 3))))))


class TestDynamicStretch:
    def test_constant_is_mid_grey(self):
        out = dynamic_stretch(ImageFloat(np.full((3, 4, 3), -2.5)), 1.2)
        assert np.all(out.data == 128)

    def test_endpoints_use_full_range(self):
        # mean 0, population std 1; D = 1 maps -1 -> 0 and +1 -> 255
        data = np.array([-1.0, 1.0] * 6).reshape(2, 2, 3)
        out = dynamic_stretch(ImageFloat(data), 1.0)
        assert set(np.unique(out.data).tolist()) == {0, 255}

    def test_range_and_monotone(self, rng):
        data = rng.normal(size=(10, 10, 3))
        out = dynamic_stretch(ImageFloat(data), 1.2).data
        flat_in, flat_out = data.ravel(), out.ravel().astype(int)
        order = np.argsort(flat_in, kind="stable")
        assert np.all(np.diff(flat_out[order]) >= 0)
        assert out.min() >= 0 and out.max() <= 255

    def test_halving_dynamic_clips_more(self, rng):
        working = ImageFloat(rng.normal(size=(20, 20, 3)))

        def clipped(d):
            out = dynamic_stretch(working, d).data
            return int(np.count_nonzero((out == 0) | (out == 255)))

        assert clipped(0.6) >= clipped(1.2)
        assert clipped(1.2) >= clipped(2.4)

    def test_invalid_dynamic(self):
        with pytest.raises(InvalidParamsError):
            dynamic_stretch(ImageFloat(np.zeros((1, 1, 3))), 0.0)


class TestMsrcr:
    @pytest.mark.parametrize(
        "level, scale, n, dynamic",
        list(itertools.product(list(RetinexLevel), [16, 240], [1, 3], [0.6, 1.2])),
    )
    def test_constant_image_is_mid_grey(self, level, scale, n, dynamic):
        image = ImageRgb8.filled(12, 10, (90, 140, 30))
        params = RetinexParams(level=level, scale=scale, scale_division=n, dynamic=dynamic)
        out = msrcr(image, params)
        assert out == ImageRgb8.filled(12, 10, (128, 128, 128))

    def test_deterministic(self, foggy):
        params = RetinexParams()
        assert msrcr(foggy, params).to_bytes() == msrcr(foggy, params).to_bytes()

    def test_shape_preserved(self, rng):
        image = ImageRgb8(rng.integers(0, 256, size=(7, 13, 3)))
        out = msrcr(image, RetinexParams(scale=16))
        assert (out.width, out.height) == (13, 7)

    def test_independent_of_workers(self, foggy):
        params = RetinexParams(level="high", scale=64)
        configure(workers=1)
        sequential = msrcr(foggy, params)
        configure(workers=3)
        assert msrcr(foggy, params) == sequential

    def test_low_level_raises_entropy_on_fog(self, foggy):
        out = msrcr(foggy, RetinexParams(level="low"))
        assert shannon(image_distribution(out)) > shannon(image_distribution(foggy))

    def test_without_color_restoration(self, rng):
        image = ImageRgb8(rng.integers(0, 256, size=(9, 9, 3)))
        # scale 16 with one division is a single surround of sigma 8
        params = RetinexParams(scale=16, scale_division=1)
        channels = [multi_scale_retinex(image.data[:, :, c].astype(np.float64), [8.0]) for c in range(3)]
        expected = dynamic_stretch(ImageFloat(np.stack(channels, axis=2)), params.dynamic)
        assert msrcr(image, params, color_restore=False) == expected
