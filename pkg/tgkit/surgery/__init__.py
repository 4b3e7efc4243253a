# a connected sum joins two oriented torus graphs at vertices with equal labels (_sum_.py);
# split cuts three separating edges and caps both sides, undoing a sum (_split_.py)

from tgkit.surgery._sum_ import SumSite, GluingRecord, make_site, find_sum_sites, connected_sum
from tgkit.surgery._split_ import split, find_splits
