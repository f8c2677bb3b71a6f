"""Derivation unit tests"""
