"""
Package principal do knc: álgebras de Krichever–Novikov em P¹ com aritmética exata.
"""

__version__ = "1.0.0"
__author__ = "knc Team"
__description__ = "Motor simbólico exato para álgebras de Krichever–Novikov, seus cocíclos e extensões centrais"
