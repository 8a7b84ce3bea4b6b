"""服务层：命令编排"""

from .check_service import CheckReport, CheckService, SuiteResult
from .sweep_service import BlochSweepService
from .tomography_service import TomographyService
from .transfer_service import TransferService

__all__ = [
    "CheckReport",
    "CheckService",
    "SuiteResult",
    "BlochSweepService",
    "TomographyService",
    "TransferService",
]
