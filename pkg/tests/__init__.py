"""Test package for warpknot."""
