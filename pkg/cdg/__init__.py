"""cdg — entropijny stopień chaosu i wykładniki Lapunowa map dyskretnych (CLI)."""

__version__ = "0.1.0"
