"""reductlab test suite"""
