"""
lyapunov — wykładniki Lapunowa: średnia log|f′| w 1D i widmo QR w m wymiarach.
"""

from .spectrum import lyapunov_1d, lyapunov_spectrum, mean_log_derivative, qr_spectrum

__all__ = ["lyapunov_1d", "lyapunov_spectrum", "mean_log_derivative", "qr_spectrum"]
