"""Quasi-cyclic two-weight and self-complementary codes from cyclic simplex codes."""
