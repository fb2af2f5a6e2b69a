"""
Planar rook algebra invariants source package.
"""
