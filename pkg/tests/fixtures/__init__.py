"""テスト用フィクスチャデータ"""
