__all__ = ['bound_command', 'scan_command', 'figure_command']
