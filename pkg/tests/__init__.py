"""Init file for tests package"""
