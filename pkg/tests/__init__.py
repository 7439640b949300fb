"""Test suite for the plane curve zeta toolkit."""
