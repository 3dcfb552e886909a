import numpy as np
import pytest

from retipy.backend import InvalidInputError, ReferenceBackend
from retipy.image import ImageRgb8
from retipy.ops.histogram import (
    Histogram256,
    JointDist,
    ProbDist,
    grey_histogram,
    grey_tones,
    image_distribution,
    joint_histogram,
    marginals,
    to_distribution,
)


def test_grey_tones_match_reference(rng):
    pixels = rng.integers(0, 256, size=(9, 11, 3))
    tones = grey_tones(ImageRgb8(pixels))
    for y in range(9):
        for x in range(11):
            r, g, b = (int(v) for v in pixels[y, x])
            assert tones[y, x] == ReferenceBackend.grey_tone(r, g, b)


def test_grey_tones_extremes():
    assert grey_tones(ImageRgb8.filled(1, 1, (255, 255, 255)))[0, 0] == 255
    assert grey_tones(ImageRgb8.filled(1, 1, (0, 0, 0)))[0, 0] == 0
    # 0.299 * 255 = 76.245
    assert grey_tones(ImageRgb8.filled(1, 1, (255, 0, 0)))[0, 0] == 76


@pytest.mark.parametrize("rgb, tone", [
    ((5, 5, 5), 5),
    ((0, 0, 5), 1),     # 0.57
    ((1, 0, 1), 0),     # 0.413
    ((0, 1, 0), 1),     # 0.587
])
def test_grey_tones_rounding(rgb, tone):
    assert grey_tones(ImageRgb8.filled(1, 1, rgb))[0, 0] == tone


def test_constant_image_histogram():
    h = grey_histogram(ImageRgb8.filled(4, 3, (128, 128, 128)))
    assert h.total == 12
    assert h.counts[128] == 12
    assert np.count_nonzero(h.counts) == 1


def test_histogram_total_equals_pixels(rng):
    image = ImageRgb8(rng.integers(0, 256, size=(17, 23, 3)))
    h = grey_histogram(image)
    assert h.total == image.pixel_count
    assert h.counts.shape == (256,)


def test_histogram_is_permutation_invariant(rng):
    pixels = rng.integers(0, 256, size=(8, 8, 3))
    shuffled = pixels.reshape(-1, 3)[rng.permutation(64)].reshape(8, 8, 3)
    assert grey_histogram(ImageRgb8(pixels)) == grey_histogram(ImageRgb8(shuffled))


def test_greyscale_array_expands_to_rgb():
    image = ImageRgb8(np.arange(16, dtype=np.uint8).reshape(4, 4))
    assert image.data.shape == (4, 4, 3)
    assert np.array_equal(grey_tones(image), np.arange(16).reshape(4, 4))


def test_empty_image_rejected():
    with pytest.raises(InvalidInputError):
        ImageRgb8(np.zeros((0, 4, 3), dtype=np.uint8))


def test_to_distribution_sums_to_one(rng):
    dist = image_distribution(ImageRgb8(rng.integers(0, 256, size=(20, 20, 3))))
    assert dist.size == 256
    assert abs(dist.p.sum() - 1.0) < 1e-12
    assert np.all(dist.p >= 0)


def test_to_distribution_two_tones():
    counts = np.zeros(256, dtype=np.int64)
    counts[0], counts[255] = 3, 1
    dist = to_distribution(Histogram256(counts))
    assert dist.p[0] == 0.75
    assert dist.p[255] == 0.25


def test_zero_total_rejected():
    with pytest.raises(InvalidInputError):
        to_distribution(Histogram256(np.zeros(256, dtype=np.int64)))


def test_histogram_validation():
    with pytest.raises(InvalidInputError):
        Histogram256(np.zeros(255, dtype=np.int64))
    with pytest.raises(InvalidInputError):
        Histogram256(-np.ones(256, dtype=np.int64))


def test_prob_dist_validation():
    with pytest.raises(InvalidInputError):
        ProbDist([0.5, 0.6])
    with pytest.raises(InvalidInputError):
        ProbDist([1.5, -0.5])
    with pytest.raises(InvalidInputError):
        ProbDist([np.nan, 1.0])
    with pytest.raises(InvalidInputError):
        ProbDist.normalized([0.0, 0.0])
    assert ProbDist.uniform(4).p.tolist() == [0.25] * 4
    assert ProbDist.delta(3).nonzero().tolist() == [1.0]


def test_distribution_is_read_only():
    dist = ProbDist.uniform()
    with pytest.raises(ValueError):
        dist.p[0] = 1.0


def test_joint_histogram_identical_images_is_diagonal(rng):
    image = ImageRgb8(rng.integers(0, 256, size=(12, 12, 3)))
    j = joint_histogram(image, image)
    assert j.shape == (256, 256)
    assert np.count_nonzero(j.p - np.diag(np.diag(j.p))) == 0


def test_marginals_match_single_histograms(rng):
    a = ImageRgb8(rng.integers(0, 256, size=(10, 14, 3)))
    b = ImageRgb8(rng.integers(0, 256, size=(10, 14, 3)))
    row, col = marginals(joint_histogram(a, b))
    assert row == image_distribution(a)
    assert col == image_distribution(b)


def test_joint_dimension_mismatch():
    a = ImageRgb8.filled(4, 4, (0, 0, 0))
    b = ImageRgb8.filled(4, 5, (0, 0, 0))
    with pytest.raises(InvalidInputError):
        joint_histogram(a, b)


def test_product_joint_marginals(random_dist):
    a, b = random_dist(6), random_dist(5)
    row, col = marginals(JointDist.product(a, b))
    assert np.allclose(row.p, a.p, atol=1e-15)
    assert np.allclose(col.p, b.p, atol=1e-15)


def test_equal_counts_normalize_to_uniform():
    dist = to_distribution(Histogram256(np.full(256, 7, dtype=np.int64)))
    assert np.all(dist.p == 1 / 256)


def test_joint_histogram_of_constant_images():
    black = ImageRgb8.filled(5, 3, (0, 0, 0))
    white = ImageRgb8.filled(5, 3, (255, 255, 255))
    j = joint_histogram(black, white)
    assert j.p[0, 255] == 1.0
    assert np.count_nonzero(j.p) == 1


def test_joint_histogram_checkerboard_against_inverse():
    board = (np.indices((6, 6)).sum(axis=0) % 2 * 255).astype(np.uint8)
    j = joint_histogram(ImageRgb8(board), ImageRgb8(255 - board))
    assert j.p[0, 255] == 0.5
    assert j.p[255, 0] == 0.5
    assert np.count_nonzero(j.p) == 2
    assert np.count_nonzero(np.diag(j.p)) == 0
