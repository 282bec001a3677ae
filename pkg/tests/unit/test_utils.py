import numpy as np

from src.utils import WorkerPool, aggregate, pool_or_serial, rng_for, spawn_seeds


def test_spawned_seeds_are_stable():
    assert spawn_seeds(7, 3) == spawn_seeds(7, 3)
    assert spawn_seeds(7, 3)[:2] == spawn_seeds(7, 2)
    assert len(set(spawn_seeds(7, 50))) == 50
    assert all(0 <= s < 2 ** 63 for s in spawn_seeds(0, 10))


def test_rng_for_depends_on_path():
    a = rng_for(1, 2, 3).integers(0, 1 << 30, size=4)
    b = rng_for(1, 2, 3).integers(0, 1 << 30, size=4)
    c = rng_for(1, 3, 2).integers(0, 1 << 30, size=4)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)


def test_serial_pool_keeps_order():
    pool = pool_or_serial(None)
    assert pool.threads == 1
    assert pool.starmap(aggregate, [([1.0, 2.0], "sum"), ([4.0], "mean")]) == [3.0, 4.0]
    assert pool.map(sum, [[1, 2], [3]]) == [3, 3]


def test_progress_bar_does_not_change_results(capsys):
    pool = WorkerPool(1, progress=True)
    assert pool.starmap(aggregate, [([1.0], "sum")] * 3, desc="sums") == [1.0, 1.0, 1.0]


def test_process_pool_matches_serial():
    jobs = [([float(i), 0.5], "sum") for i in range(8)]
    with WorkerPool(2) as pool:
        assert pool.threads == 2
        parallel = pool.starmap(aggregate, jobs)
    assert parallel == [aggregate(*job) for job in jobs]
