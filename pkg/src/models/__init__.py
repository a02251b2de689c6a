# src\models\__init__.py
# Domain types and the regression models backing the conformity scorers
from src.models.data_models import (
    CoverageParams,
    CsvTable,
    Dataset,
    FiniteHorizonPmf,
    LimitDistribution,
    ModelSpec,
    PredictionInterval,
    ReplicationConfig,
    ReplicationSummary,
)
from src.models.regressors import (
    ConstantMean,
    FittedModel,
    KnnDispersion,
    KnnMean,
    KnnQuantile,
    fit,
    predict,
    predict_many,
)

__all__ = [
    'CoverageParams', 'CsvTable', 'Dataset', 'FiniteHorizonPmf', 'LimitDistribution',
    'ModelSpec', 'PredictionInterval', 'ReplicationConfig', 'ReplicationSummary',
    'ConstantMean', 'FittedModel', 'KnnDispersion', 'KnnMean', 'KnnQuantile',
    'fit', 'predict', 'predict_many',
]
