"""Two-qubit Tavis-Cummings model beyond the rotating-wave approximation."""
