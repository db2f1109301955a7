"""Detection of AI-generated product reviews in Tamil and Malayalam.

Classical pipeline: text cleaning, TF-IDF + averaged word-embedding
feature fusion, standardization, and SVM / random forest / gradient
boosting / soft-voting classifiers, with evaluation and corpus
analysis tooling.
"""

__version__ = "0.1.0"
