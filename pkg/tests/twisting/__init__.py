"""Tests for src.twisting"""
