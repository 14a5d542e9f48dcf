def test_import():
    import clint  # noqa: F401
