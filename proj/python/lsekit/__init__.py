"""Streaming linear least-squares estimation toolkit.

Batch and recursive (forgetting-factor) least-squares estimators over a
dense linear-algebra core, plus synthetic scenario generation and CSV
interchange. The heavy lifting lives in the compiled ``_core`` module.
"""

from ._core import (
    BatchSolution,
    ConfigError,
    DataError,
    Dataset,
    DriftKind,
    DriftSchedule,
    EmptyInputError,
    EstimatorState,
    ForgettingConfig,
    GeneratedStream,
    IoError,
    LiftGeometry,
    NumericalError,
    ParseError,
    Sample,
    ScenarioKind,
    ScenarioSpec,
    ShapeError,
    SingularityError,
    StepRecord,
    __version__,
    assemble,
    cost,
    dataset_from_arrays,
    gain_trace,
    generate,
    pseudo_inverse,
    read_samples_csv,
    rls_init,
    rls_predict,
    rls_run,
    rls_step,
    sherman_morrison_update,
    solve_batch,
    symmetrize,
    woodbury_inverse,
    write_samples_csv,
)

__all__ = [
    "BatchSolution",
    "ConfigError",
    "DataError",
    "Dataset",
    "DriftKind",
    "DriftSchedule",
    "EmptyInputError",
    "EstimatorState",
    "ForgettingConfig",
    "GeneratedStream",
    "IoError",
    "LiftGeometry",
    "NumericalError",
    "ParseError",
    "Sample",
    "ScenarioKind",
    "ScenarioSpec",
    "ShapeError",
    "SingularityError",
    "StepRecord",
    "__version__",
    "assemble",
    "cost",
    "dataset_from_arrays",
    "gain_trace",
    "generate",
    "pseudo_inverse",
    "read_samples_csv",
    "rls_init",
    "rls_predict",
    "rls_run",
    "rls_step",
    "sherman_morrison_update",
    "solve_batch",
    "symmetrize",
    "woodbury_inverse",
    "write_samples_csv",
]
