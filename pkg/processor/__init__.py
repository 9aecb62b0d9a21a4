from .scheme_base import (Ciphertext, IbeScheme, MasterSecret, ParamsBundle,
                          UserKey)
from .bf import BonehFranklin
from .sk import SakaiKasahara
from .bb1 import BonehBoyen1
from .bb2 import BonehBoyen2
from .waters import Waters
from .gentry import Gentry
from .novel_ibe import (NovelIbe, our_decrypt, our_encrypt, our_extract,
                        our_setup)
from .novel_hibe import (HibeKey, NovelHibe, hibe_decrypt, hibe_encrypt,
                         hibe_extract, hibe_setup)
from .fs_hibe import (ForwardSecureHibe, FsKeyBundle, FsNodeKey, fs_decrypt,
                      fs_derive, fs_encrypt, fs_setup, fs_update)
from .registry import (BENCHMARK_SCHEMES, SchemeId, get_scheme, scheme_decrypt,
                       scheme_encrypt, scheme_extract, scheme_names,
                       scheme_setup)
from .kem import KemCiphertext, kem_decrypt, kem_encrypt
