"""
Suítes de verificação do knc.
"""

from .verification_suites import VerificationSuites

__all__ = ["VerificationSuites"]
