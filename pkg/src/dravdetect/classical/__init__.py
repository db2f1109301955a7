"""Classical classifiers: SMO-based SVM with grid search, random forest,
gradient boosting and the soft-voting ensemble."""

from .svm import SvmParams, SvmModel, train_svm, svm_grid_search, CvResult
from .forest import ForestModel, train_random_forest
from .boosting import GbModel, train_gradient_boosting
from .voting import VotingModel, soft_vote, make_voting_model
from .validation import cross_validate, stratified_folds, predict_labels

__all__ = [
    "SvmParams",
    "SvmModel",
    "train_svm",
    "svm_grid_search",
    "CvResult",
    "ForestModel",
    "train_random_forest",
    "GbModel",
    "train_gradient_boosting",
    "VotingModel",
    "soft_vote",
    "make_voting_model",
    "cross_validate",
    "stratified_folds",
    "predict_labels",
]
