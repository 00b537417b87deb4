"""Frozen bitmap glyphs for 0-9 and A-Z.

Generated by tools/make_fontdata.py (DejaVu Sans rendered at 160 px em, thresholded at 128/255); regenerate with that
script if the charset or render size changes.
"""

import base64
import zlib

import numpy as np

EM_PX = 160

# char -> (height, width, dx, dy, advance, packed bits)
_GLYPHS = {
    '0': (121, 80, 11, 30, 101.796875,
        'c-p;`%MHUI42B)$kRu~73ZubjjKT;x=1}3{NA#mMQhI2Ml;jIw^RRyt5v2!N+nAeCVz$nOM^jpbs!$NxeH!y2l!d' +
        'wwvzshN#ZA?CGivTc-Nf-9P7?b=96$V(Z9u7sgDz95Iu$CqkUmPqNJduMQ0BVYX$EaZNk}&yxq*TmEAs9%K5?REw' +
        '*)#s$u0*p7QLq8l#P~&`W<;tx(9`Bh`&Vruf#v6>8^06pGV=08)A7E^ZJ%A*L3Duc%?CPm9fZY<T&ykT7W*FnMp^' +
        '`7W4)ULYL4g^b1Wx=g>at!BitqH&9DZUr=*Uho;&@S-YOeL<z3'),
    '1': (117, 69, 18, 32, 101.796875,
        'c-rmLu?>ST5CzbWC{ktwMqxC2ldQr9Ss@)Q5=|mmzTAC(i<*uCH~)10Jh=ftvJc|SW<9@3TRbPvs<aIlBQ0xD{Du' +
        'oh9vt*(AOjbUJWWVCkU9$)gm{Zcv;xWA3WTkNZvzoTYlB{!nGFFN0tf*b0^G=rToB=};^(Kdx3VS;d%t-pOJA&gI' +
        'DzCpG*MmJ'),
    '2': (119, 74, 12, 30, 101.796875,
        'c-qC2u@S={3`LcrpkxF#38Uc&G81=M#3Q(L!J$ZqZ|Cfki9_RO^#7OOY$8fLk**uFkr${6QGjPsiL54&d2IEkZW(' +
        'X^R1<4f7_c~ooFPxDl(aRdS6VmMyXz~nHkVpzHbn~^MDgq(#>F6TyJPrA2WdYWcsoR|5o(2oZ#8h-MlFwPkbYahi' +
        'h%EnKFze82H(}w;dJq&c4u`)c7i%$k~bS~*EGRj;6K^|Y#!Yl@83^>e?IsV{1N^DzeoRH24w{Odyp%F@ZVj%>I+*' +
        'HtCI'),
    '3': (121, 77, 12, 30, 101.796875,
        'c-oy*v2DaK45Xq$rAF{5S}A2ZyUbVyvWQ1e>B0~rQarv9JswHEIvlAp$s?bL3Rlt}GhYDQ1gt<sfJBo5K0)z8VF2' +
        'DK8?uM;AR1L^@iazSlIKOzN~a~G1_6S$tW}l%`41Yk)HelzHHV~_Hb8%H8d?#I9?Wwv+=A7E8(v;6dk|(r2%aANt' +
        'JuqYLQm&UiR2RN-1&+UGpNW$#o=8vpJ-Tc!C}=(=H~FT*?eun8I=0j2x5(9u?jK$(pZko3PWXy(Olw3*=Td|o_r&' +
        'TA8zvGW`RcFd3t5G?jGEK5&Zv>ycBzx|73liwCU^KsZUVXJE*S%16_7(#L(@&Bt?DfRfWaSfJ?2}Z*#@rMyD3P<@' +
        '*Jj=k|Bd{PuUC^ZrLN@-{5cj*^x622w1vaR'),
    '4': (117, 85, 8, 32, 101.796875,
        'c-r05y=}uV6a-)rDp+a+j-t`1R9Q=-2*?0&sY21^{oFAt1Xf|w2l_jZ&@06s;8pTjft|~No2v$#GXz%)aB;Z-#|$' +
        '5aeWDc;wNNM~YMuBCuh}Vd{0MFM7P>uy=z=ey9i3>!OK8WZP+S|)6(2%zuS6RTq2peNHk?AYrx0CmHliB}QR}QkI' +
        '||Wi+la2%h1wU<)&5I#+=Zxh3LQ@&YMnx@ljvdrQR^h?okY9sBI>&m^-iK5ChDC;t&?bkiF#+E-bpmVK%+BJ?<5+' +
        'VM*cp8#z&yRC+eMvHr5^F1C7o^BMdY;6OGP5D^Ck{CYo2|=*la4*coVc2AaI1H7~ozz5kcz(j4w{4mDAFrF4AFjK' +
        ');2l#Z|I)9k++`U`G4(ER'),
    '5': (119, 76, 12, 32, 101.796875,
        'c-rNYI}XAy42E45DH}dQkCJP#k)!1(IYPz`s3v{}sS;v=g)DWyI`;2J6X|JiSL1;6I|O<Xb+i5rZB!IxZU|U&svt' +
        'ha(Gh5O#22iqfgXWcG&;~8s1DQ_^EgJfk$t>c+LBnw!u~gvN%bOvv&hhoO)VsfvaG<Bv?zd$#mWhkSfcq?_ji;%>' +
        'gtI`h~_EZAdKdQoUfqeBVAMdOF^fyXD816nk~%Ki@DP^dcXTPu=#`}EDsIkD$h}Z@MzI~zyrt^0Lgd45n%k7<jaJ' +
        'yLh%j#9!Ivt%;scP)mqHpV&wS*70AW7'),
    '6': (121, 81, 11, 30, 101.796875,
        'c-n20y=}uV5QQbEP{|RPO*k3_q{tXvMS%y%3JOxV72t+JXkPB;@#HvGA$+#TcSpWQ4g)`#276|rW)z8NAM7JPN&@' +
        '=ls8pFIrRGE?BG2NqI&Dt7Q!(OKRpKwPDQ!|oX_bx^sj*1;wbSq-gys(#pU`km3n)LKq}BdXlwKYvV1J~+gNip(y' +
        '@i9?|7P+XEl&$iS~BoEVpn%DrC2%JbS^jA26K@S?hs9IBGW7OKY<F1onc;}FIX1n3ZrKFfjtx5^fz=h5Q~{E&SWj' +
        'cpY~*tNK~RxpcXtPZ${kI8I<S~6saJ19D;1b>qwrv6DZRM%!_mZ1^Tvt$Ye5mcyfj*M9G7Ef<1|4Donh<6kRZ^yF' +
        'prIR+rgaW_Ot~^lrM~)dh<S*4zavyk+SgC88c1v8h7(9Wq=N5#jNe%+bT-Kn0U|@yOh)S+K$lsgko{3y@Dir!XzE' +
        'RuLL?&7*8(wv)${WZ)zeEM*!;eg%t~s><l>=Q}>0@4ep_x@)<Q!@$k2j?J%_wO>F+lV3nGyZKF3{EX<{{sJsNB%l'),
    '7': (117, 75, 13, 32, 101.796875,
        'c-s5_pZefFjPV;TR1agEhcSLIfC1zG{}2X){r>|H20udXA5^ZMIJplH1~V1p8XydL;^h7iA@`p+xd#viJCSk>gyr' +
        'mslfx1r_~Z@{mgA>oBr{SklKBTJlBt*gNQ-1DCIDDu0RW6|PaF'),
    '8': (121, 80, 11, 30, 101.796875,
        'c-pm;z0t!U42G3+LCFY=;?c}#jKT;mDL5<oHP}ur#djYCdCrl9^hy8#fC#!)#3t}UTA3*_Rr?dMgV@tL+)NCEQZW' +
        'a_9Uv(+a~0<e-5F;p3vC>(i*a5gKvbfjyazdmY-*6h$*)GGjj3yrd(;{d?umoU6ens)%L>1#{DB_v_CawX&+jCv(' +
        'y}MAiby7_lE^C0FIOXjE5zSLwL=u)aGm`{-6p~omDu`LMPhHd(zWN|oP#kN;oEGm?{c4rdYcH&Kqf-6k~yei%qM8' +
        'ix%(QlglDJgqtlnJt`kW=NW5*Lti>Fk$Zo_Sm<a!!hQyM=r%bJm3t7E=oyc_Qt83Mg>qlgow&*(VQI6x`2;L8xKf' +
        '9N5O?9)YuT$quAGdql_|fxtpS5znAex5HP_hTa42!=_9b6s$c>`}qO$-'),
    '9': (121, 81, 10, 30, 101.796875,
        'c-n20%WcFk3`FVZ;G;`$DJo44Qb0;bD_Z1`<CYKuX}~$f3kYV0AJO^j9u^N4IiyCEh=_P6`%TQNQD$Z%fPEZ<not' +
        'trC1?#2p;3uXszF;&3u2{%iYO+DNusEK__zyIX{|{IRVz86x9XG;Z8RaJC?%vAAxI-g6c?wN*I7D}lx;FfyiexFz' +
        '{hC2g>G`n{D@9H*$qNwQ7^EK-3iHA3rq6so)&(#B9M7=%V+*@>4|SHjj}GC_y|Eh1z$q&8iHRTcniT69UjqPmq{T' +
        '5>1*F|bi@4V-QWc5s6ox#M7hJA!<e{VGxL+BfG(B-f;X$to;48ECJhuCH4t<RIvqN8MV5<9m<XWLcdnDo%9U3eG&' +
        's1C(JOSbQ}e01Kw_}r6BBf~iV3Q-hzYuk($(r?WmOAyvRN3hGRDp56Cfd-$SqR8I=R#8%}Ld%&jNXo-}JNGy~4*G' +
        ';{Pph6h5g$3-?Iw+C$J#JJD`6<R&g;x07<yhhmf6Y;sN;(e(FzZ~a9O8iM@DR<Z*&%Kep)gK!$-iLpTUhr1h@!?o' +
        'fY{{|cSAgu'),
    'A': (117, 107, 1, 32, 109.453125,
        'c-mEzJ95J?3`Ffwp;AZCQFJsqRj%cuFjZQY@`PgqAU?ZdqY>umc|n7`-E^(;xz)OhJn?qOz{@7`VD817T)58M=fX' +
        'XiJDDSUWBbMm<2rMLIoKEZBYTr3#Qnm)$Vv7lI~1Gzz^>eZfK3+I^%K~&z9FF2VOI`z<w&6%><X<F&>+}V2D@_i3' +
        'TPbc%E4~smUb({Zs97RaeLZV<zP3a0vcEL>8gOnZD~I&PTD6|0j;{EeR64^Tm_t8r+sqS{zUF!_h;ItDg(MI+IKG' +
        'P{*y7eUX1pg%l4f+-0t0lJ%|YCT(ln#4;Wn7JxsJ8oPQhK>h=ij_R@B6(SC5=e(aCi7s>VT!{X}|hsD>0>&%S{_h' +
        'jy5&g{F89o*-_b>;?hb5sPQhe5RVYgFbgBsbeH&ZlzZln-!ogD!);Vz7lcV~R8TT4%`q{o?$rb=bjKK-`65#~R1A' +
        'gR_9()DBJ|a0-2aQ#&{fNZg^96<tE(z&+OF8{8&ux~oNq+l4M<wf_Uql>`0'),
    'B': (117, 82, 16, 32, 109.765625,
        'c-p0uL2AV?3`7;Y$kIp1QGB!ndVn6Ofq#HrAvb8C8$(T|ax9JW`GGE)m584uYeqIuzePmS89}4iq9PJngiXYvgP{' +
        'I2P)P@|I*3dV1hEk;1hJ&^0ChRmQZ-u%nn1rvmupdxL6;k-iAw`z1Ps*eYXfypHZb5YP?z5foUj=<5*#`>6O7mm3' +
        '@8R_9tRU1H((}slktzzy_s}rW;ZY*v+Kh^RZ1w&+Q8we<KDnn{pivsx)~XT?(mD(nM0u!0@Fx$J@F^KUPB)RdM(L' +
        '^&CV#@>ycioWZw07mFGbnyWoclKI7fM3Eu{)aR%z{4+9gv3>@)ept|7TY!~7jJ_AD&q2+Nf5sd!<hYsGA9tnmHf?' +
        '#iEVl$D==oXF{KB=S2Gb2-Q*Ky{A!|zNjywSp)_d3(-La&b}uU{U3h2SDRN{k%j+f&5HY^`Vd1qA|!L;'),
    'C': (121, 94, 9, 30, 111.71875,
        'c-qxeL2kq#40ObSBOj=gk5o#Z)E|(i@svJ+BL@`M24l>2t7ebo5Y4jV@j&7M;1%%%S%_E#9)z(&&rnDWVqzE!#)*' +
        'T$abk}X9|ND@2Bcp5fVB&r8$EKXJX=xXNA5j<{=B-4%D=z5(@Z@tah+UeGj1hqg-VnnI6FB2bx%Pm2@@p?es`!B^' +
        'cnPiAjRI3*0xOw7z)`PDqtzzQ1(dyLviYbDMfJ{cAFwRQ#{nyuZqDmy`i`-^mEcLLocrx_`h^})ZNgRo4Iq5$#jB' +
        'OjNN)=f1c@Hsr@?B^N-mYR+*1OWt^F&H$Zh`hA$+ql5x(euRQUxJxAM7nM^<JX%g@uoTS!caBwP>mN0A1XcXlomN' +
        'dEQnqpwKZRmm7wi(%L%a2HHe$x6<z5ykowMh'),
    'D': (117, 98, 16, 32, 123.203125,
        'c-qa>v2DaK3<XdhT)5N-9>t?sKnBQ25s(40f;WhPGzMb$=Tox28AL9EG`Wfg=@GmWNr0cV%b&?&>^TlO#%6I}Vl4' +
        'LMj1dLOtxylr1#&L9gUKBTFqMF%QVav}Ot%nN0gtTvQrVC-j#~a&Kqkit@<BR*9c&fYK?Rm7RlpLq3c8V(Dxgjkb' +
        'Tc-AfJ1;4rV5yT72qWSUV5s4nHGV7U4WMac<EJO#3s<=5MbfY0uw$22J8aNdVv{l0>J@h6=2pEfeG&pe73>t!05o' +
        '>fIXxGZ~zYA{{jCS{_-!~f$_Hw=U+P9w8q1?hVLbIXtVi-yKaT+R^Q$u_U1hBAC9d7V$!8KaWe<}8qq@|%5jaYnV' +
        '#%%8cSfdm;Jdlrt-?)*US~S_fouBWa(z}MYs8`-CBxl?AFw2x1P(m`vRv9V;c'),
    'E': (117, 75, 16, 32, 101.09375,
        'c-s5_9}4Ef7@uK`fAuidc^Km-jPc(d#&`~6{P|C!QGXa9!2W*&gu(v*161h$KPW@~{{aYt`Tq~7Q2l=>ga7{n2!n' +
        'BC8wCqvc^K<3jPU~=?EEmsLwIz-W3U~@_&};rqcJ#G69e7BKLAqY^r-'),
    'F': (117, 67, 16, 32, 92.03125,
        'c-s5_pPt|k0~px<ZvfNm|35$k{{Mr}^8XKjY3BbwAOiLOAvFL02Vk0U1Q-DgDtRcQ8A^YshtU7{p#le?^bdO|gB?' +
        'mgAi;>y7#Vg(FaQ8gL3<|'),
    'G': (121, 102, 9, 30, 123.984375,
        'c-pm;L2kq_2t^%PYP$0gaugrUIa;JHy6h2Vj*zO0W|8I>7~7vnGg8&6*$j+%fH4q)eg)Uiz5<}hlgRC8R2eIcfX(' +
        'D&GImqol;oA-lo3wJPKixc*Hc%nH@}NHnGIje%VD_Y6crh2>VqPwWv)nRcM>G_TL_Z+WyQMG8;LSUi(%dlu{!F(u' +
        '!&X0L%c?HUX?l38p!wLOZq&}N~_YXG<z2QWHp|xRw~{q_Pp$|oK<Pr-y8?$c)K6|vE%eZ$NR%vW``Vq%;nbzn~9A' +
        '!yFNXtPuJT2i+p<I!n**hSi~2LoCMi<`3sAz$kLJBBOk0q#v98AuzZ3rWWqc7j8}#P_^yJGmkwe1GhWC8><dAr9$' +
        'ygh8A~5GK{yG5j6HurI6Q)6jw?8of`q=b1mPeHGIq~`^x0P=H$}U>w3u4e_GaR!Zx}h)?Ro3Vu5Bp|_LFR#sSLlz' +
        'Hn;6G55M~Qg0yV?whaE@v|xijIPK)B+*#w6=;~(E{{IGV*F~B'),
    'H': (117, 89, 16, 32, 120.3125,
        'c-s5_j{ySe|Ns9FW!eLo4G^Y0ka+;Y<OebzK$z@6<_8Fq8OZzrVKM@lf1pMHnWF{|VS@)97>&G9gXw1Q4**u`A@l'),
    'I': (117, 15, 16, 32, 47.1875,
        'c-s5_f7pTt0G&zO1^'),
    'J': (149, 39, -8, 32, 47.1875,
        'c-rlbu?>YV5JMlLpv(x2lF?u^{w5hAWr_%6OO$^EBIT6W?|cX7hD8%r4cOG7sKKras!lk>hke+Km0)|Y8te!rg}6' +
        'h^zr+&aHAl=I{fd5iup-Um3_sN5^GjKMr+xL}((LK1mfY-!{G4z*+0(WxP_hmWlpim@'),
    'K': (117, 92, 16, 32, 104.921875,
        'c-n20&5eXG426T{z>yLth0>rjI@lH>Z2`-X1B%B#&+B(!4g>mxz85EsWi<b-B8zl?{fKk{-sMibh&13yzev2vlXw' +
        '<65{q1kSA7Dj`b@0q#HI!|bz)Nk>lX*`WNP5e9)V|51B<GGS111G;lLIS?BRhu9N5DHTV07gJn)LJk?O#qZm}|Hz' +
        '@Jb%-d*i@3AN#<D{zE6Mz~{qVHn|t5$+h_h7oQUbvaJ8;#3<>wc=DO{!O)Ff!fxb>SnLK@J+ZC?uExY=C4_D79ND' +
        'J#D7_WE^yDveBHgukycgSRQy?cGH9zV+QFkX_M!dmbqvz#bZ$Ddv(9p~mm{W==Z4@uS*v|gZg{3<+o}gAYR!c@cC' +
        'SYMP=Bx0_K-WC>5^=9cS0UG<Pq%hz#$Lpa@=B<2X^`Y<sNkBFB%0$O^AmEN3VGzt;Wnv)90+AG-y^`G{TOWY|q=k' +
        'qd92u#47(utn$Pr{{rd#4mk'),
    'L': (117, 72, 16, 32, 89.140625,
        'c-s5_j{ySyk1|FXql`hz7zh9WzwAR}'),
    'M': (117, 106, 16, 32, 138.046875,
        'c-rNZJx;?w5JqjeaJfg=qwLXaDoT#PQ3w^sAQA;FhyswT9loEj<2w*3c4jm0<(t^+h(7pLgRhH=qT<8Fq+;(=5vz' +
        '+u#r161&W1P}cDak6v!S02DWBsMA`RQwkbO2}2pM|H=Xgc+6lwTI@tz^#7sYSNTZf}BJq?fe>cR3kUQoQbZ;DUm&' +
        'JeK?s*wi%@V!G+d_W$DnB$pHlYER1Ld79sBXnnZ>zw!M5EZL{szS_I1vE(x1EJL+ViV*LEk;7K<Rw-@qe9GV0i+N' +
        'x2y%#J6ErDA3;vlMi#7;S2p9w@1f+rn$<ZvRg$;rfqVNnzAts&)aYC*LDwM+@NFiVlG;l&>G{gz{+ky~A20;n|gC' +
        'S0cUPGLaZ$TJa2184i!BE{72)So4#1J$X!ZN=##0k-EXw10`Ap{MEfYV?I6LLsHOs$h3gjo6xO}?gv24B;JTIg>w' +
        'gmtbNLWrdw(9)~c1QpzommQkoiv~jo!G?rtG+mw8*VY{xynPdD+Lj3wZOep4cQ40jJ)j~(LX!*$4c^!Z)jWo8ygd' +
        '5G%cG#Cdp4mWLqemTI|-p<y+OxAryoVVJ<e{>;O+X)pvxcQ)Zup'),
    'N': (117, 88, 16, 32, 119.6875,
        'c-nQ;u?@p83`9{2E?jy9kK)ms(K1R#Na@0mLh>vq;ayn0@&g3f+BwA>t+h+CN;b`h<a6*P`IbB-FUcxc@3h1NX^A' +
        '^36E{>QuBZgh&Sh{$T4F(3;)JwJq-7#46KR>K%tYnQt8*SiS|-wnkw%O(Vx$oxjTn{0sO+qrWiZm1p2qYvrl&DIj' +
        'p=DjuVj{3WTsbkTAHAx30j(<r3qS^prr{GzX_sMe(}$>b?$?k<SMyH&XPrP($qg}|KSJEQEnL'),
    'O': (121, 108, 9, 30, 125.9375,
        'c-q}nJ95P!4CIXqmp+1z@{VS5GiOrd8gwZ`Nx?it0!e0>Nyc?tc)VWp18E6?pM`4hXCop2jurtg1rGsK6detv4)z' +
        '8pHn4V}W*ty&;Hl^w*6BhT7w(3lCXt1&8aLTnlFi+==U4mk(nD!EXA70O@vAK_T2F4FtnMhkl2%v5MYUZx#YNOwt' +
        'MJ*%OKhsOuHs9p6Z6~`tB?3F7yP?4+I*ag@A<|ShwZC;t$tJs$2rV9+ox@yD7bfapLahfj{0_;=tgDtz+tAI9+(4' +
        't_{no&b)xD(T{&@5pBKgX0`>J5W$ALhOj#vd$~RCnQZ!QZPbu7ud86)b@2?ad<=qB&zuQsJhY?zI?%tuX=bj(N0V' +
        'f592<OWq%jn@$;=sZz<Cud2pg4eTproMMfDoZZfqbE|q3D4gqEw=ag21BoqAY`AqnM-4uj3Vfw*y`r*PZeM!Qop+'),
    'P': (117, 75, 16, 32, 96.484375,
        'c-rlfF;c}a3`94R!ljSkqvUAG4LAZvAu}9={ECvyP!I+aA!(&FP*G5kYDadSR%?mqw*zP<<N!t&vH>&If=babNFG' +
        'k1P(tjGEVU5Fn5AXTTQy6A;$Z*mlXh@&aU%-c<W!;k&n7F}(xX{}w(YZkr91OzrFTbJ$x-&>v!j%C5~Yov9Hp~-5' +
        'TzZ7Qo;*SqYp`f5LF`{H+aT%A*wJijzLsoa=%CY;Ht<cQF``3)Ff|2Rp~_O**#ISyb{$itCCsir5jOdj#*6^`;@V' +
        '(-y>h}yk2nq_JV!59z2&}Dc62nTM?)u_p0Y!b;MqE#9nP~!v{3eI|U*u8)&5%BX&cDsLaYxJxc$mKSbdR83fax'),
    'Q': (140, 108, 9, 30, 125.9375,
        'c-q}nyK=-J4CKazOMikt<vz{i&zwn--=IqwN*By25=fwR9^<((E^cnUu#!MphrrK7CG=+@A^;st0v-x(0_ae*Rg@' +
        'Z7E1+1x+<<OtfN}+QMY~(43&}5B4Mj~N3tu#DvR_Fyx4kXD(v}}Bl$NvCP^oQx)a8fPlWQoeJIbr1)g2;H>=bs9h' +
        '+1nAK3jQ-w`#4kXlZq_J-5ZG5pO2Jua8Qb#y<5kUwFr6=PLi^epM64*-V}Hr^Qhex;o3}wO<rReHk~p(6RQw;Y{6' +
        'oU=H-wZ=MS)C#pDV<itt64~p{z>f<lU(&c=avP!s=PoT(C<SF{E6r9HSpspV8uM}S8)dqOI+ELJl*rM3I(Aejmcj' +
        'JJQ0z-uJ)g#O3;Z)+l!Yt#Mg9D&BINvy13c3v#5qcEZ7dji79{3?zrMYMUgN@(4clPT{5zKu5$>(SC&AB)UMF~C@' +
        '<Ezq+$&qoO)qj41)6gpkqd%R-jYi{!afzytK_fn)v3ZRr6BdmxHQS5?'),
    'R': (117, 90, 16, 32, 111.171875,
        'c-qC(!EM7Z3<XdNI{2s&Jc>rEfeg@<G>U-^&>Riau<}XqlMdjXlS87&FY-4@q<6fYle}v8b<t&SSmv=jWqU09=2*' +
        '8&Y#Z)J;J!MRvx(2ZavLsp!Rui1ZntW{`v`-N5vGbzEZfcS^o6?&jGdD>NsfUbHsXS$hO-<uFhnC>aGc?ctA-~z&' +
        'Tz$5!v$AAh3_-Z_YZhqjRnw4cM#8SbzTi;>9;rKX*j=i@VIaH{cN<rEpQ9mV(MB<-5w*V5o6N+9noFC%MbP1qKPz' +
        'fQZXKIk@)_AE2|;nWz{I-0XL49m9Ba<wEBiqlur9<c#b-!sIv<1pf@F5I#{FKm)S^{*^q%SToB2yOpjrRl~_i`a7' +
        'HA<GAG1K--so&VF<?vO^ndQ5}Fv1h!L6?k%&bQBN8zLF>d%Eh9E{HVu)|z+JA^4h!M$g?Z3pO{}Ctt<Bdo!^Rqxo'),
    'S': (121, 82, 11, 30, 101.5625,
        'c-oaz!EFQ~4D^WyPfDN^T1h2YI!H@M`J{|30Vy9ID;zL*tV`~cWFL1UGahU_Kt#k`NWQ?#r=U2{il&L!&;>N98+9' +
        'PgD_54oMvXix(XkS545Dzt{5fRXIEZm-P2C(8y7B23qR?(y^ebu2J}0iLk(V%}*5{>SlKj5W*d=e2cJgd~Cyx>}g' +
        ';wW_SU@~MY#??c=Km`iu^Z89tZ1gA8Dt-*A|S^xf{b8fO?QlSelT;lCn@5*v%(&w?5$Mugty@FJlHH~ma5R~g!O_' +
        'w8>;Ji9%$bB@L1j++QEik$06cm87CVtA!id}Ogcj6$%IabH=B^ztw5(f@Z~SW_E!V{tnp6!11X<y#MLypr=rL6cI' +
        'ipHFZCf)m(oBjsSA3L6Pk8$Vxu{vtk;@L!VTA#fGh5QBSjY;j|<O3Cw)iyHt9kR-uiBi6OG9K7lYLA8v'),
    'T': (117, 98, 0, 32, 97.734375,
        'c-s5_e^7%13_u|N{{aIGu>b!7XEXl)2WK<X|8Ib^M>ULU7}YSUVMuEL0HkAXVE'),
    'U': (119, 89, 14, 32, 117.109375,
        'c-rleI}XDj5JYWJP;!Jl3P;0Tu9ci5?o!558b`7`8TJ#WO>Y{WfPKI$FxY4SCc{d+8VYeXEX2hy6Ia7T+zdzJ?l$' +
        '5nKE<c_U-3O`f@jzSkFXWI!j|z4Tf!EKguVLPc%6g|D4}S$greaV3KoT;Vs5SwEaI==T)a-OCa>et=yiR!*?on()' +
        '$Z$9?5je|793OS&s!}^jbPGDbW1B>f$EqvMaSU><-qLdIY+)#X^;Lm+KKJkLI0yJ&qrguK|PT^eE^Pw0HX'),
    'V': (117, 107, 1, 32, 109.453125,
        'c-mEz$#KI#3<SyIgHMLQP&PE$nK1*WAeRG>pRV!&<C+0hABm_|6N5cOUY7iv@{~_J?D8vuhehO+2Ofre$WL)!m)y' +
        'nab8!!$UF&DrMOOK1+@M{#jrLVrxTqL%AGF(h*r0J`SFY^F4K!%wopvkJZsr3D<5t>@V|?Q_*!?xM+YiQf7veidy' +
        'UmLYdKK}#%J@E44A(i>qX9JN84%w&*n>lZ&cPntWc(;%xKT`dcr$)*h#y?qgUbf<C25bZj31^PZgOdlY0b5WpS85' +
        '-R6~(m*ptinnIMKcCBPn-l7<}%?L}}=OfKx;JU-SX_-S3RwA1<p0?t)fByW(MSHXFeyUnIB?KW=Mc~_d9oZ0JaSc' +
        'Bw@sl%(T;><psp*n`sSu;C1vvbRvqMdlP7pDytr_gjW+*iLric|Y*aau1<|KGS%-iy-)i&Ohszwf^5Qqu+-cZd|H' +
        'Q*PXly5ZE`IBl?Td*{?%m#H?`xOL)2=eEw7y||-u%fy}S5;sNTM(6g<sXe%VW4p)h'),
    'W': (117, 148, 5, 32, 158.203125,
        'c-m#vL5`d-5CzaiELd^`j>6GQl!N3djIzizh-Q&xkg^Do99OFT|F&T=3wr2&hF^uT&0hFRcHnci-*(}@$qIimOST' +
        'D}_+0FV&}<w(SgFVwdbj)$t+oqs{Ayo?7UTHQve3}co3h-{!oZHQvV9U-jpHY~gvO3GWx1i5fgKfPdkH1uco#y`4' +
        'XNPtx1ouFC;MWmw<7z)@g7KMz9AKCS3@HM&o*OxoDvOoa=f1kEjPr19i@r}23~B!__#aKXh+IwiqKj*V!@8qiqw_' +
        '0j2It)$Oo-OO%Y1DBNpsvX^34(dBFI{L*#`lrlttl)e#GJG&jVq_+X5WGa|nXx`H#HxJ*MV*wNGwx)KOoiJKF7Y3' +
        'K?P0!3*JvET<nR|26c_#FoygRbCr9AZpIxZDHba)F|CjKh0gNXj_6=N9GE%#r1RP-38H9a}_n0`f$CAgp~nc$J25' +
        'hd|LfJ~pBQ;Te$6rZ9YcwkIoV2vr9f9dRlV?fjZk3G*ehp>@8U>~=?Sy+8xdp*f6)>rpkmF^4Zc<oXU=oF*MbjmQ' +
        'hM>%9W<gI+njS0^W4eJ?YbazlO#q7-P;j0N)aS_bg0ADkR@ttgxm9eLR|RM#IM|6WTI)}Nhov8`X6rycnPJ1TWe1' +
        'oEs}F0m$V2sgAfbwiYnyvUBS(9XPeX+^_2&2XRFI{(Hf4f#Dfx`e(HrL3mJ-ccCtTibiy8KohwyQ5R+7tvbOl-SQ' +
        'Q!~GPReAC;XC~3>^T|qmeFa1PI-2(z$+JuCHZ%?$|(Edbo-IoHL3MUl&^+d}JZBI1Sy)w{I!)>+T@&U~^^!g8-4e' +
        'd4Ds}`JV1wvCt<$rWEv?(0WKh|n01^'),
    'X': (117, 99, 5, 32, 109.609375,
        'c-qZVOKJmA3~T7(E$0YxlpHOy>$L*CNRE)~QV3No`7>Sw-Yokd%!_3tJsS<YKKuaN1y{eHaT^INcoNh71n9pGyAx' +
        'P(*N^8DziLd@0*qB4kLXzl)&k@qj7TbsI39px!-%uH5$|=tErbzQ^41QAs>4q1rSL2u9QY?*tlsc1Ajd*HU$0sYw' +
        'NHZIe6X7P9D`L2wFN8IObOJg>{1)C?qn5^tTd9+)cUHWFZfAT8cAsyL9!AkRx^T>HX|rj0?BGdN}5KBl|Zu62<pD' +
        '<tOSbHjFdF>wzo~^)-;;jsTrq_Ym<95)*Wci)(p1xqCOAwdEDPj(-yH$^Mda(Vv8ui7B>D%0LP&K;z$73BLQ^2Sp' +
        'Zd<1yF>u0ID_(AQ`6tWN{uqqnrnD#bX{o<NO1ZC)uR'),
    'Y': (117, 98, 0, 32, 97.734375,
        'c-rmKyA6Xd6op|&DHwxM7!7w>E1QHaEmE2kC@1%IPP{=HD8Rb<{7V>s-tt=Uz+USGPaL(Lv4d#BF%w<!nTRex6Iy' +
        'W>TCfTEkjRHb7HUKu60(qxg@j^OC}xE`L=+(+4-t8YC`XBMl#>YA{ZOb-gbGEdP_+Y%?F=QVP@)Va%1|P{uA>QWy' +
        '>5l#$xxuR&dO1R0_h7FV#tRKIa0_GLyj17q>!N-Lxx@q8G=I1*Ift<1=<J1kRyfywE^`3Z3Ef|q>v$n9JK-U0V$*' +
        'd&j01NS%-RVI5+%l!xz43WTp'),
    'Z': (117, 95, 7, 32, 109.609375,
        'c-rleu?>JA5JfQ*mW;qCjD{PylAUXixBzw(gl{8og(Pw@#=>8{;&ShD-=HMg%Aq25!W-e0@Jv`&OoqRH5@$vrqtJ' +
        '+jEqulSSgytu88--p0hdt{lR_e<&|_*GcE{8>tkXotJ5BPbXD9x%Blp>zCiB<&X03r=tLNAH)wlzd69u9'),
}

SUPPORTED = frozenset(_GLYPHS)

_cache = {}


def glyph_bitmap(ch):
    """Binary bitmap (bool 2-D array) of one supported character."""
    if ch not in _GLYPHS:
        raise KeyError(f"unsupported character: {ch!r}")
    if ch not in _cache:
        h, w, _, _, _, blob = _GLYPHS[ch]
        raw = zlib.decompress(base64.b85decode(blob))
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8))
        _cache[ch] = bits[: h * w].reshape(h, w).astype(bool)
    return _cache[ch]


def glyph_metrics(ch):
    """(dx, dy, advance) of one character relative to the draw origin."""
    if ch not in _GLYPHS:
        raise KeyError(f"unsupported character: {ch!r}")
    h, w, dx, dy, adv, _ = _GLYPHS[ch]
    return dx, dy, adv


def compose_text(text):
    """Binary ink bitmap of a string, glyphs advanced along a shared baseline."""
    if not text:
        raise ValueError("text must be non-empty")
    for ch in text:
        if ch not in _GLYPHS:
            raise KeyError(f"unsupported character: {ch!r}")
    placements = []
    pen_x = 0.0
    for ch in text:
        bm = glyph_bitmap(ch)
        dx, dy, adv = glyph_metrics(ch)
        placements.append((int(round(pen_x)) + dx, dy, bm))
        pen_x += adv
    x0 = min(p[0] for p in placements)
    y0 = min(p[1] for p in placements)
    x1 = max(p[0] + p[2].shape[1] for p in placements)
    y1 = max(p[1] + p[2].shape[0] for p in placements)
    canvas = np.zeros((y1 - y0, x1 - x0), dtype=bool)
    for px, py, bm in placements:
        h, w = bm.shape
        canvas[py - y0:py - y0 + h, px - x0:px - x0 + w] |= bm
    return canvas
