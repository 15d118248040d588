from mtdiff.data.types import (
    DatasetRecord,
    FrameLabelTrack,
    GlobalCondition,
    MotionSequence,
    NormalizationStats,
)
from mtdiff.data.generators import (
    ACTIONS,
    GeneratorParams,
    generate_sequence,
    make_dataset,
    sample_script,
)
from mtdiff.data.oracle import oracle_label
from mtdiff.data.normalize import denormalize, fit_normalization, normalize
from mtdiff.data.merge import MergeResult, merge_annotations

__all__ = [
    "ACTIONS",
    "DatasetRecord",
    "FrameLabelTrack",
    "GeneratorParams",
    "GlobalCondition",
    "MergeResult",
    "MotionSequence",
    "NormalizationStats",
    "denormalize",
    "fit_normalization",
    "generate_sequence",
    "make_dataset",
    "merge_annotations",
    "normalize",
    "oracle_label",
    "sample_script",
]
