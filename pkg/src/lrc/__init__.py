"""Left-invariant Ricci collineations of canonical and Kobayashi-Nomizu connections
on three-dimensional Lorentzian Lie groups."""
