"""Soft-voting ensemble: unweighted mean of member probability vectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DataError, UsageError
from .validation import predict_labels


@dataclass
class VotingModel:
    members: list

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        probas = [m.predict_proba(X) for m in self.members]
        shape = probas[0].shape
        for p in probas[1:]:
            if p.shape != shape:
                raise DataError("ensemble members disagree on class sets")
        return np.mean(probas, axis=0)

    def predict(self, X: np.ndarray) -> np.ndarray:
        return predict_labels(self.predict_proba(X))


def make_voting_model(members: list) -> VotingModel:
    if len(members) < 2:
        raise UsageError("soft voting needs at least 2 member models")
    return VotingModel(members=list(members))


def soft_vote(members: list, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    model = make_voting_model(members)
    proba = model.predict_proba(X)
    return proba, predict_labels(proba)
