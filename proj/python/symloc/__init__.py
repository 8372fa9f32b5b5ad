"""Planar object localization: environments, Bayesian filters, benchmarks."""

from ._core import (  # noqa: F401
    AggregateRow,
    CellResult,
    Control,
    Environment,
    ExperimentConfig,
    FilterConfig,
    Incidents,
    Measurement,
    MotionNoiseModel,
    Pose,
    RandomStream,
    Rect,
    RunReport,
    RunTrace,
    SymmetrySpec,
    Trajectory,
    TrajectoryParams,
    Vec2,
    collides,
    experiment_config_from_json,
    free_area,
    fse,
    generate_labyrinth,
    generate_symmetric_world,
    generate_trajectory,
    k_nearest_beacons,
    load_experiment_config,
    load_map,
    load_trajectory,
    make_nonsymmetric,
    mse,
    mse_random_threshold,
    preset_environment,
    preset_names,
    run_experiment,
    run_filter,
    sample_free_pose,
    save_map,
    save_trajectory,
    segment_collides,
    symmetry_aware_fse,
    write_report,
)

__version__ = "0.1.0"
