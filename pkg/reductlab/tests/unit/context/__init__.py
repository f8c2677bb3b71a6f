"""Context unit tests"""
