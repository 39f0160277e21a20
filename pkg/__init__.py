"""
fano-qpt - Fano 表示下的量子过程层析

## 模块架构

- **pauli_fano/**: Pauli 串编号与 Fano 向量
- **channels/**: 噪声通道与仿射映射
- **tomography/**: 制备基, 线性反演, chi_F 文件
- **measurement_sim/**: 测量模拟与 Fano 估计
- **noise_analysis/**: 稀疏模式, 拟合, 判别, 报告
- **cli/**: qpt 命令行
- **shared/**: 配置, 异常, 日志, 输出

## 设计原则

- 单一职责原则:每个模块只负责一个特定功能
- fail-fast:非物理输入立即失败
- 可复现:同一种子得到相同输出
"""

__version__ = "0.1.0"
__description__ = "Quantum process tomography in the Fano representation"
