"""Lattice unit tests"""
