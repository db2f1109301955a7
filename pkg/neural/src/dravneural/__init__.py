"""Neural baselines for AI-generated review detection in Tamil and
Malayalam: transformer fine-tuning and a CNN+BiLSTM classifier.

Standalone component: it reads the same corpus CSV schema as the
classical pipeline and writes the tab-separated predictions interchange
format (`id, gold, predicted, p_ai`), which is the only boundary
between the two packages.
"""

__version__ = "0.1.0"
