"""
Test package for the rook algebra invariants project.
"""
