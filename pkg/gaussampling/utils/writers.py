'''The CLI writes every table through the writer below, so that reruns of
the same configuration produce identical bytes.
'''

import csv
import math
import numbers

import simplejson


def format_cell(value):
    '''Formats one CSV cell.

    Floats use ``repr`` (shortest round-trip digits), complex numbers are
    written as ``re+imj`` from the same float formatting, and everything
    else goes through ``str``.
    '''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        return repr(value)
    if isinstance(value, numbers.Complex):
        return '%s%s%sj' % (repr(float(value.real)),
                            '+' if value.imag >= 0 else '-',
                            repr(abs(float(value.imag))))
    if value is None:
        return ''
    return str(value)


class CSVWriter(object):
    """
    A CSV writer which will write rows to the file-like object "fio",
    formatting numbers reproducibly.
    """

    def __init__(self, fio, dialect=csv.excel, **kwds):
        '''
        :param fio: Anything with a ``write`` method opened in text mode
                    with ``newline=''``.
        :param dialect: The dialect of the csv file you're using, defaults
                        to excel's dialect with Unix line endings.
        '''
        kwds.setdefault('lineterminator', '\n')
        self.writer = csv.writer(fio, dialect=dialect, **kwds)

    def writerow(self, row):
        '''Implements the writerow function as a csv writer would do so.'''
        self.writer.writerow([format_cell(cell) for cell in row])

    def writerows(self, rows):
        '''Implements the writerows function as a csv writer would do so.'''
        for row in rows:
            self.writerow(row)


def _plain(value):
    '''Converts numpy scalars and arrays into JSON-friendly values.'''
    if hasattr(value, 'tolist'):
        value = value.tolist()
    if isinstance(value, complex):
        return {'re': value.real, 'im': value.imag}
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


def write_report(fio, report):
    '''Writes a structured report as sorted, indented JSON text.'''
    fio.write(simplejson.dumps(_plain(report), sort_keys=True, indent=2))
    fio.write('\n')
