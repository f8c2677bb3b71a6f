"""Reduct engine unit tests"""
