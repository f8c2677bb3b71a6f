"""Acceptance criteria"""
