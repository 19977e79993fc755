"""Exact analysis of quadratic rotation symmetric Boolean functions."""
