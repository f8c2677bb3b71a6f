"""Infrastructure unit tests"""
