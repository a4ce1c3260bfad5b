from .classifier_model import (
    DEFAULT_CLASSIFIERS,
    ClassifierSpec,
    DecisionTreeSpec,
    GradientBoostSpec,
    KnnSpec,
    LogisticSpec,
    MlpSpec,
    NaiveBayesSpec,
    SvmSpec,
)
from .experiment_model import DataSource, ExperimentConfig
from .kernel_model import (
    DEFAULT_SWEEP,
    KERNEL_LABELS,
    KernelSpec,
    LinearKernel,
    PolynomialKernel,
    RbfKernel,
    SigmoidKernel,
)
from .log_model import ConsoleLogModel, FileLogModel, LogModel
from .metric_model import (
    TABLE_ROWS,
    ClassMetrics,
    ConfusionMatrix,
    MetricReport,
    PrfReport,
    RocCurve,
)
from .report_model import ReportBundle, RunMetadata, SampleComparison, SeedRun
from .table_model import (
    AttributeKind,
    AttributeSpec,
    Dataset,
    RawTable,
    ScalerParams,
)
from .trained_model import (
    DecisionTreeModel,
    GradientBoostModel,
    KnnModel,
    LogisticModel,
    MlpModel,
    NaiveBayesModel,
    Prediction,
    SvmModel,
    TrainedModel,
    TreeNode,
)


__all__ = [
    "DEFAULT_CLASSIFIERS",
    "DEFAULT_SWEEP",
    "KERNEL_LABELS",
    "TABLE_ROWS",
    "AttributeKind",
    "AttributeSpec",
    "ClassMetrics",
    "ClassifierSpec",
    "ConfusionMatrix",
    "ConsoleLogModel",
    "DataSource",
    "Dataset",
    "DecisionTreeModel",
    "DecisionTreeSpec",
    "ExperimentConfig",
    "FileLogModel",
    "GradientBoostModel",
    "GradientBoostSpec",
    "KernelSpec",
    "KnnModel",
    "KnnSpec",
    "LinearKernel",
    "LogModel",
    "LogisticModel",
    "LogisticSpec",
    "MetricReport",
    "MlpModel",
    "MlpSpec",
    "NaiveBayesModel",
    "NaiveBayesSpec",
    "PolynomialKernel",
    "Prediction",
    "PrfReport",
    "RawTable",
    "RbfKernel",
    "ReportBundle",
    "RocCurve",
    "RunMetadata",
    "SampleComparison",
    "ScalerParams",
    "SeedRun",
    "SigmoidKernel",
    "SvmModel",
    "SvmSpec",
    "TrainedModel",
    "TreeNode",
]
